#ifndef PHTUN_CORE_HPP
#define PHTUN_CORE_HPP

#include <complex>
#include <vector>

// Exact two-mode photon tunneling: dimensionless parameterization, the 2x2
// mode-transfer matrix, and the combinatorial engine that evolves arbitrary
// fixed-photon-number states.

namespace phtun {

inline constexpr const char* kVersion = "0.1.0";

// The combinatorial engine is exact but its cost and rounding grow with the
// sector size, so sectors are capped (callers may raise the cap explicitly).
inline constexpr int kDefaultSectorCap = 60;

// Dimensionless description of two coupled bosonic modes A and B:
// gamma = detuning / coupling, tau = coupling * time. Derived quantities
// (Q = sqrt(1+gamma^2), P0 = 1/Q^2) are always recomputed, never stored.
struct TunnelingConfig {
    double gamma = 0.0;
    double tau = 0.0;
};

// Q = sqrt(1 + gamma^2) >= 1. Throws std::invalid_argument on non-finite
// or negative-time configs.
double q_factor(const TunnelingConfig& config);

// Single-photon transfer probability P = sin^2(Q*tau) / Q^2 in [0, 1].
double base_probability(const TunnelingConfig& config);

// Heisenberg-picture transfer matrix [[u, v], [v, conj(u)]] acting on the
// mode creation operators. u and v are kept together as one value: the
// phase of u is undefined at |u| = 0, so no standalone phase is exposed.
struct TransferMatrix {
    std::complex<double> u;
    std::complex<double> v;
};

// u = cos(Q tau) - i (gamma/Q) sin(Q tau), v = -i sin(Q tau) / Q.
// |v|^2 equals base_probability(config).
TransferMatrix transfer_matrix(const TunnelingConfig& config);

// State within one total-photon-number sector. amplitudes[k] multiplies the
// basis state with k photons in mode A and total_photons - k in mode B.
struct TwoModeFockState {
    int total_photons = 0;
    std::vector<std::complex<double>> amplitudes;

    // |photons_a, photons_b> basis state.
    static TwoModeFockState basis(int photons_a, int photons_b);
};

double state_norm(const TwoModeFockState& state);

// Evolves a normalized sector state under the transfer matrix by expanding
// (u a+ + v b+)^n (v a+ + u* b+)^m / sqrt(n! m!) |0,0> for every basis
// component. Throws std::invalid_argument on unnormalized states,
// non-unitary matrices, or sectors above the cap.
TwoModeFockState evolve_fock(const TwoModeFockState& state, const TransferMatrix& m,
                             int sector_cap = kDefaultSectorCap);

// Probability of ending with photons_a_final photons in mode A. Covers
// forward, partial, and back tunneling alike. Throws std::out_of_range if
// photons_a_final is outside [0, total_photons].
double outcome_probability(const TwoModeFockState& initial, const TransferMatrix& m,
                           int photons_a_final, int sector_cap = kDefaultSectorCap);

}  // namespace phtun

#endif  // PHTUN_CORE_HPP
