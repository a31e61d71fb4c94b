#ifndef PHTUN_ENSEMBLES_HPP
#define PHTUN_ENSEMBLES_HPP

#include <utility>
#include <vector>

// Photon-number distributions of the field initially occupying mode B, and
// the ensemble average that reduces coherent/squeezed tunneling to weighted
// sums of Fock-background probabilities.

namespace phtun {

enum class DistributionKind { fock, coherent, squeezed };

// Truncated photon-number pmf. Weights cover at least 1 - trunc_tol of the
// distribution; mean stores the analytic mean of the untruncated pmf.
struct PhotonNumberDistribution {
    DistributionKind kind = DistributionKind::fock;
    double mean = 0.0;
    std::vector<std::pair<int, double>> weights;  // (photon number, weight)
};

inline constexpr double kDefaultTruncTol = 1e-12;

// Point mass at n photons.
PhotonNumberDistribution fock_pmf(int n);

// Poisson weights w_n = exp(-nbar) nbar^n / n!, truncated once the
// cumulative weight reaches 1 - trunc_tol. Log-space evaluation.
PhotonNumberDistribution coherent_pmf(double nbar, double trunc_tol = kDefaultTruncTol);

// Squeezed vacuum with mean photon number nbar = sinh^2(r): weights only on
// even n, w_{2l} = tanh(r)^{2l} (2l)! / (cosh(r) (l!)^2 4^l). The squeezing
// phase cancels in |c|^2 and never appears. (2l)! overflows double near
// l = 85, hence log-gamma throughout.
PhotonNumberDistribution squeezed_pmf(double nbar, double trunc_tol = kDefaultTruncTol);

// Ensemble-averaged full-transfer probability of n2 photons:
// sum_l w_l * prob_multi(n2, l, p) over the truncated support.
double weighted_sum(const PhotonNumberDistribution& dist, int n2, double p);

}  // namespace phtun

#endif  // PHTUN_ENSEMBLES_HPP
