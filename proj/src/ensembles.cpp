#include "phtun/ensembles.hpp"

#include <cmath>
#include <stdexcept>

#include "phtun/closedform.hpp"

namespace phtun {

namespace {

void require_mean(double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw std::invalid_argument("mean photon number must be finite and non-negative");
    }
}

void require_trunc_tol(double trunc_tol) {
    if (!(trunc_tol > 0.0 && trunc_tol < 1.0)) {
        throw std::invalid_argument("truncation tolerance must lie in (0, 1)");
    }
}

}  // namespace

PhotonNumberDistribution fock_pmf(int n) {
    if (n < 0) {
        throw std::invalid_argument("photon number must be non-negative");
    }
    return {DistributionKind::fock, double(n), {{n, 1.0}}};
}

PhotonNumberDistribution coherent_pmf(double nbar, double trunc_tol) {
    require_mean(nbar);
    require_trunc_tol(trunc_tol);
    PhotonNumberDistribution dist{DistributionKind::coherent, nbar, {}};
    if (nbar == 0.0) {
        dist.weights.emplace_back(0, 1.0);
        return dist;
    }
    const double log_nbar = std::log(nbar);
    // Stop on the analytic tail bound rather than an accumulated total: past
    // the mode the term ratio is r = nbar/(n+1) < 1 and shrinking, so the
    // missing mass after n is at most weight * r/(1-r). A summed total would
    // plateau below 1 - trunc_tol once rounding noise exceeds trunc_tol.
    const int max_n = static_cast<int>(nbar + 20.0 * std::sqrt(nbar + 1.0) + 2000.0);
    for (int n = 0; n <= max_n; ++n) {
        const double weight = std::exp(-nbar + n * log_nbar - std::lgamma(n + 1.0));
        dist.weights.emplace_back(n, weight);
        const double ratio = nbar / (n + 1.0);
        if (ratio < 1.0 && weight * ratio / (1.0 - ratio) <= trunc_tol) {
            return dist;
        }
    }
    throw std::runtime_error("coherent pmf truncation did not close");
}

PhotonNumberDistribution squeezed_pmf(double nbar, double trunc_tol) {
    require_mean(nbar);
    require_trunc_tol(trunc_tol);
    PhotonNumberDistribution dist{DistributionKind::squeezed, nbar, {}};
    if (nbar == 0.0) {
        dist.weights.emplace_back(0, 1.0);
        return dist;
    }
    // In terms of the mean: tanh^2(r) = nbar/(1+nbar), cosh(r) = sqrt(1+nbar).
    const double tanh_sq = nbar / (1.0 + nbar);
    const double log_tanh_sq = std::log(tanh_sq);
    const double log_cosh = 0.5 * std::log1p(nbar);
    // Same tail-bound stopping rule as the Poisson case: term ratios are
    // bounded by tanh^2(r), so the missing mass after l is at most
    // weight * tanh^2/(1 - tanh^2) = weight * nbar.
    const int max_l = static_cast<int>(std::log(trunc_tol) / log_tanh_sq +
                                       40.0 * std::sqrt(nbar + 1.0) + 2000.0);
    for (int l = 0; l <= max_l; ++l) {
        const double log_weight = l * log_tanh_sq - log_cosh + std::lgamma(2.0 * l + 1.0) -
                                  2.0 * std::lgamma(l + 1.0) - l * std::log(4.0);
        const double weight = std::exp(log_weight);
        dist.weights.emplace_back(2 * l, weight);
        if (weight * nbar <= trunc_tol) {
            return dist;
        }
    }
    throw std::runtime_error("squeezed pmf truncation did not close");
}

double weighted_sum(const PhotonNumberDistribution& dist, int n2, double p) {
    double sum = 0.0;
    for (const auto& [n, weight] : dist.weights) {
        sum += weight * prob_multi(n2, n, p);
    }
    return sum;
}

}  // namespace phtun
