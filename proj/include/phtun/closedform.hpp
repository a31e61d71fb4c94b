#ifndef PHTUN_CLOSEDFORM_HPP
#define PHTUN_CLOSEDFORM_HPP

#include <stdexcept>

// Closed-form tunneling probabilities of n2 photons from mode A into mode B
// as functions of the single-photon transfer probability p, for Fock,
// coherent, and squeezed-vacuum fields initially occupying mode B; plus the
// hypergeometric series the coherent/squeezed forms require.

namespace phtun {

// Truncation policy for the Pochhammer series evaluators.
struct SeriesPolicy {
    double rel_tol = 1e-13;
    long max_terms = 1000000;
};

// Thrown when a series fails to converge within SeriesPolicy::max_terms or
// would overflow double range.
class series_error : public std::runtime_error {
  public:
    explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

// Confluent hypergeometric function 1F1(a; b; z) = sum_k (a)_k/(b)_k z^k/k!.
// Summation stops once three consecutive terms each fall below
// rel_tol * |partial sum| (terms can dip before peaking for large z, so a
// single small term is not a safe stop). b must not be a non-positive
// integer; z must be >= 0.
double hyp1f1(double a, double b, double z, const SeriesPolicy& policy = {});

// Gauss hypergeometric function 2F1(a, b; c; z), same stopping rule.
// c must not be a non-positive integer; requires 0 <= z < 1 (the series
// domain actually used; no analytic continuation is attempted).
double hyp2f1(double a, double b, double c, double z, const SeriesPolicy& policy = {});

// Probability that a single photon in A tunnels into B when B already holds
// n photons: (n+1) (1-p)^n p. Bosonic enhancement aids the transfer for
// small p; the (1-p)^n factor inhibits it for large p.
double prob_one_photon(int n, double p);

// Probability that all n2 photons in A tunnel into B holding n photons:
// C(n+n2, n2) (1-p)^n p^n2. Binomials go through log-gamma, so any n >= 0
// is accepted (ensemble averages need n well beyond the sector cap).
double prob_multi(int n2, int n, double p);

struct PeakPoint {
    double p_star = 0.0;
    double value = 0.0;
};

// Location and value of the maximum of prob_multi over p:
// p_star = n2/(n+n2), value = C(n+n2, n2) n2^n2 n^n / (n+n2)^(n+n2),
// evaluated fully in log space.
PeakPoint peak_multi(int n2, int n);

// Full-transfer probability of n2 photons with mode B in a coherent state
// of mean photon number nbar: exp(-nbar) * 1F1(1+n2; 1; nbar(1-p)) * p^n2.
double prob_coherent(int n2, double nbar, double p, const SeriesPolicy& policy = {});

// Maximum over p of prob_coherent(1, nbar, p). For nbar > 1/2 the interior
// stationary point of exp(-nbar p)(1 + nbar(1-p))p is
//   p_star = (nbar^2 + 3 nbar - nbar sqrt(nbar^2 + 2 nbar + 5)) / (2 nbar^2),
//   value  = (sqrt(nbar^2+2 nbar+5) - 2)/nbar
//            * exp((sqrt(nbar^2+2 nbar+5) - nbar - 3)/2);
// for nbar <= 1/2 that point leaves [0,1] and the maximum sits on the
// boundary: (1, exp(-nbar)). value -> 1/e as nbar -> infinity.
PeakPoint prob_coherent_single_max(double nbar);

// Full-transfer probability of n2 photons with mode B in squeezed vacuum of
// mean photon number nbar = sinh^2(r):
// p^n2 * 2F1((1+n2)/2, (2+n2)/2; 1; (1-p)^2 nbar/(1+nbar)) / sqrt(1+nbar).
double prob_squeezed(int n2, double nbar, double p, const SeriesPolicy& policy = {});

}  // namespace phtun

#endif  // PHTUN_CLOSEDFORM_HPP
