#include "phtun/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace phtun {

namespace {

// Extended precision for the binomial expansion: the sums interfere
// destructively near balanced splitting and plain double loses ~1e-8 of
// norm by N = 60.
using complexl = std::complex<long double>;

constexpr double kUnitarityTol = 1e-12;
constexpr double kNormTol = 1e-10;

void require_sector(int total_photons, int sector_cap) {
    if (sector_cap < 0) {
        throw std::invalid_argument("sector cap must be non-negative");
    }
    if (total_photons < 0) {
        throw std::invalid_argument("total photon number must be non-negative");
    }
    if (total_photons > sector_cap) {
        throw std::invalid_argument("total photon number " + std::to_string(total_photons) +
                                    " exceeds the sector cap " + std::to_string(sector_cap));
    }
}

void require_valid_state(const TwoModeFockState& state) {
    if (state.amplitudes.size() != static_cast<size_t>(state.total_photons) + 1) {
        throw std::invalid_argument("amplitude count must be total_photons + 1");
    }
    if (std::abs(state_norm(state) - 1.0) > kNormTol) {
        throw std::invalid_argument("state is not normalized");
    }
}

// powers[i] = base^i for i = 0..count.
std::vector<complexl> power_table(complexl base, int count) {
    std::vector<complexl> powers(count + 1);
    powers[0] = complexl(1.0L, 0.0L);
    for (int i = 1; i <= count; ++i) {
        powers[i] = powers[i - 1] * base;
    }
    return powers;
}

}  // namespace

double q_factor(const TunnelingConfig& config) {
    if (!std::isfinite(config.gamma) || !std::isfinite(config.tau)) {
        throw std::invalid_argument("gamma and tau must be finite");
    }
    if (config.tau < 0.0) {
        throw std::invalid_argument("tau must be non-negative");
    }
    return std::sqrt(1.0 + config.gamma * config.gamma);
}

double base_probability(const TunnelingConfig& config) {
    const double q = q_factor(config);
    const double s = std::sin(q * config.tau);
    return (s * s) / (q * q);
}

TransferMatrix transfer_matrix(const TunnelingConfig& config) {
    const double q = q_factor(config);
    const double c = std::cos(q * config.tau);
    const double s = std::sin(q * config.tau);
    return {{c, -config.gamma / q * s}, {0.0, -s / q}};
}

TwoModeFockState TwoModeFockState::basis(int photons_a, int photons_b) {
    if (photons_a < 0 || photons_b < 0) {
        throw std::invalid_argument("photon numbers must be non-negative");
    }
    TwoModeFockState state;
    state.total_photons = photons_a + photons_b;
    state.amplitudes.assign(state.total_photons + 1, {0.0, 0.0});
    state.amplitudes[photons_a] = {1.0, 0.0};
    return state;
}

double state_norm(const TwoModeFockState& state) {
    double sum = 0.0;
    for (const auto& amplitude : state.amplitudes) {
        sum += std::norm(amplitude);
    }
    return std::sqrt(sum);
}

TwoModeFockState evolve_fock(const TwoModeFockState& state, const TransferMatrix& m,
                             int sector_cap) {
    require_sector(state.total_photons, sector_cap);
    require_valid_state(state);
    if (std::abs(std::norm(m.u) + std::norm(m.v) - 1.0) > kUnitarityTol) {
        throw std::invalid_argument("transfer matrix is not unitary");
    }

    const int total = state.total_photons;
    const complexl u(m.u);
    const complexl v(m.v);
    const auto u_pow = power_table(u, total);
    const auto v_pow = power_table(v, total);
    const auto uc_pow = power_table(std::conj(u), total);

    // log k! table; binomials and the sqrt(k!(N-k)!/(n!m!)) weight are
    // assembled in log space and exponentiated per term.
    std::vector<long double> lfact(total + 1);
    for (int k = 0; k <= total; ++k) {
        lfact[k] = std::lgamma(static_cast<long double>(k) + 1.0L);
    }

    std::vector<complexl> out(total + 1, complexl(0.0L, 0.0L));
    for (int n = 0; n <= total; ++n) {  // n photons of the input component in A
        const complexl amp_in(state.amplitudes[n]);
        if (amp_in == complexl(0.0L, 0.0L)) {
            continue;
        }
        const int mb = total - n;
        for (int k = 0; k <= total; ++k) {  // k photons in A after transfer
            const int i_lo = std::max(0, k - mb);
            const int i_hi = std::min(n, k);
            complexl sum(0.0L, 0.0L);
            for (int i = i_lo; i <= i_hi; ++i) {
                const int j = k - i;
                const long double log_weight =
                    lfact[n] - lfact[i] - lfact[n - i] +      // C(n, i)
                    lfact[mb] - lfact[j] - lfact[mb - j] +    // C(mb, j)
                    0.5L * (lfact[k] + lfact[total - k] - lfact[n] - lfact[mb]);
                sum += std::exp(log_weight) * u_pow[i] * v_pow[n - i + j] * uc_pow[mb - j];
            }
            out[k] += amp_in * sum;
        }
    }

    TwoModeFockState result;
    result.total_photons = total;
    result.amplitudes.resize(total + 1);
    for (int k = 0; k <= total; ++k) {
        result.amplitudes[k] = {static_cast<double>(out[k].real()),
                                static_cast<double>(out[k].imag())};
    }
    return result;
}

double outcome_probability(const TwoModeFockState& initial, const TransferMatrix& m,
                           int photons_a_final, int sector_cap) {
    if (photons_a_final < 0 || photons_a_final > initial.total_photons) {
        throw std::out_of_range("final photon number is outside the sector");
    }
    const TwoModeFockState evolved = evolve_fock(initial, m, sector_cap);
    return std::norm(evolved.amplitudes[photons_a_final]);
}

}  // namespace phtun
