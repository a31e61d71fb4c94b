#include "phtun/closedform.hpp"

#include <cmath>
#include <string>

namespace phtun {

namespace {

// Probability arguments outside [0,1] are caller bugs, not limit cases.
void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("p must lie in [0, 1]");
    }
}

void require_policy(const SeriesPolicy& policy) {
    if (!(policy.rel_tol > 0.0) || policy.max_terms < 1) {
        throw std::invalid_argument("series policy needs rel_tol > 0 and max_terms >= 1");
    }
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Shared Pochhammer-series loop: `ratio(k)` maps term k to term k+1. Stops
// only after three consecutive terms each below rel_tol * |partial sum|.
template <typename Ratio>
double pochhammer_sum(Ratio ratio, const SeriesPolicy& policy, const char* label) {
    double term = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (long k = 0; k < policy.max_terms; ++k) {
        term *= ratio(k);
        sum += term;
        if (!std::isfinite(sum)) {
            throw series_error(std::string(label) + " series exceeded double range");
        }
        if (std::abs(term) < policy.rel_tol * std::abs(sum)) {
            if (++small_streak == 3) {
                return sum;
            }
        } else {
            small_streak = 0;
        }
    }
    throw series_error(std::string(label) +
                       " series did not converge within max_terms; raise max_terms");
}

}  // namespace

double hyp1f1(double a, double b, double z, const SeriesPolicy& policy) {
    require_policy(policy);
    if (is_nonpositive_integer(b)) {
        throw std::invalid_argument("1F1 lower parameter must not be a non-positive integer");
    }
    if (z < 0.0) {
        throw std::domain_error("1F1 argument must be non-negative");
    }
    return pochhammer_sum([=](long k) { return (a + k) / (b + k) * z / (k + 1); }, policy,
                          "confluent hypergeometric");
}

double hyp2f1(double a, double b, double c, double z, const SeriesPolicy& policy) {
    require_policy(policy);
    if (is_nonpositive_integer(c)) {
        throw std::invalid_argument("2F1 lower parameter must not be a non-positive integer");
    }
    if (z < 0.0 || z >= 1.0) {
        throw std::domain_error("2F1 argument must lie in [0, 1)");
    }
    return pochhammer_sum(
        [=](long k) { return (a + k) * (b + k) / ((c + k) * (k + 1)) * z; }, policy,
        "Gauss hypergeometric");
}

double prob_one_photon(int n, double p) {
    if (n < 0) {
        throw std::invalid_argument("background photon number must be non-negative");
    }
    require_probability(p);
    return (n + 1) * std::pow(1.0 - p, n) * p;
}

double prob_multi(int n2, int n, double p) {
    if (n2 < 1) {
        throw std::invalid_argument("transferring photon number must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("background photon number must be non-negative");
    }
    require_probability(p);
    return std::exp(log_binomial(n + n2, n2)) * std::pow(1.0 - p, n) * std::pow(p, n2);
}

PeakPoint peak_multi(int n2, int n) {
    if (n2 < 1) {
        throw std::invalid_argument("transferring photon number must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("background photon number must be non-negative");
    }
    const double total = n + n2;
    // n^n and (n+n2)^(n+n2) leave double range near 160 photons; the whole
    // value goes through log space (with the 0 log 0 = 0 convention).
    const double log_value = log_binomial(n + n2, n2) + n2 * std::log(double(n2)) +
                             (n > 0 ? n * std::log(double(n)) : 0.0) -
                             total * std::log(total);
    return {n2 / total, std::exp(log_value)};
}

double prob_coherent(int n2, double nbar, double p, const SeriesPolicy& policy) {
    if (n2 < 1) {
        throw std::invalid_argument("transferring photon number must be positive");
    }
    if (!(nbar >= 0.0)) {
        throw std::invalid_argument("mean photon number must be non-negative");
    }
    require_probability(p);
    const double z = nbar * (1.0 - p);
    // The exp(-nbar) rescue factor sits outside the series, so the series
    // itself overflows once z + n2 log(1+z) passes the double exponent range.
    if (z + n2 * std::log1p(z) > 700.0) {
        throw series_error("coherent background too strong for the series form; "
                           "the confluent series would exceed double range");
    }
    return std::exp(-nbar) * hyp1f1(1.0 + n2, 1.0, z, policy) * std::pow(p, n2);
}

PeakPoint prob_coherent_single_max(double nbar) {
    if (!(nbar > 0.0)) {
        throw std::invalid_argument("mean photon number must be positive");
    }
    // Stationary point of exp(-nbar p)(1 + nbar(1-p))p. For nbar <= 1/2 it
    // sits at p >= 1, so the physical maximum is the p = 1 boundary.
    const double root = std::sqrt(nbar * nbar + 2.0 * nbar + 5.0);
    const double p_star = (nbar + 3.0 - root) / (2.0 * nbar);
    if (p_star >= 1.0) {
        return {1.0, std::exp(-nbar)};
    }
    const double value = (root - 2.0) / nbar * std::exp(0.5 * (root - nbar - 3.0));
    return {p_star, value};
}

double prob_squeezed(int n2, double nbar, double p, const SeriesPolicy& policy) {
    if (n2 < 1) {
        throw std::invalid_argument("transferring photon number must be positive");
    }
    if (!(nbar >= 0.0)) {
        throw std::invalid_argument("mean photon number must be non-negative");
    }
    require_probability(p);
    if (nbar == 0.0) {
        return std::pow(p, n2);
    }
    const double z = (1.0 - p) * (1.0 - p) * nbar / (1.0 + nbar);
    return std::pow(p, n2) *
           hyp2f1(0.5 * (1 + n2), 0.5 * (2 + n2), 1.0, z, policy) / std::sqrt(1.0 + nbar);
}

}  // namespace phtun
