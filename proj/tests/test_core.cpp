#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "phtun/core.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using cd = std::complex<double>;
using mat2 = std::array<std::array<cd, 2>, 2>;

mat2 scale(const mat2& m, cd factor) {
    mat2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = factor * m[r][c];
        }
    }
    return out;
}

mat2 add(const mat2& a, const mat2& b) {
    mat2 out{};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out[r][c] = a[r][c] + b[r][c];
        }
    }
    return out;
}

// Independent oracle for the transfer matrix: fixed-step RK4 integration of
// the single-particle equation dM/dtau = -i K M with K = [[gamma, 1],
// [1, -gamma]] (mode ordering A, B), starting from the identity.
mat2 rk4_transfer(double gamma, double tau) {
    const cd minus_i(0.0, -1.0);
    const mat2 k{{{cd(gamma), cd(1.0)}, {cd(1.0), cd(-gamma)}}};
    auto rhs = [&](const mat2& m) {
        mat2 out{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                out[r][c] = minus_i * (k[r][0] * m[0][c] + k[r][1] * m[1][c]);
            }
        }
        return out;
    };

    mat2 m{{{cd(1.0), cd(0.0)}, {cd(0.0), cd(1.0)}}};
    const int steps = std::max(1, static_cast<int>(std::ceil(tau / 5e-4)));
    const double h = tau / steps;
    for (int s = 0; s < steps; ++s) {
        const mat2 k1 = rhs(m);
        const mat2 k2 = rhs(add(m, scale(k1, h / 2.0)));
        const mat2 k3 = rhs(add(m, scale(k2, h / 2.0)));
        const mat2 k4 = rhs(add(m, scale(k3, h)));
        m = add(m, scale(add(add(k1, scale(k2, 2.0)), add(scale(k3, 2.0), k4)), h / 6.0));
    }
    return m;
}

double factorial(int n) {
    double out = 1.0;
    for (int k = 2; k <= n; ++k) {
        out *= k;
    }
    return out;
}

double binomial(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Independent oracle for evolve_fock at small photon numbers: expand
// (u x + v)^na and (v x + u*)^nb as polynomials in the evolved mode-A
// creation operator, convolve, and restore the Fock normalization.
std::vector<cd> convolution_evolve(int na, int nb, cd u, cd v) {
    const int total = na + nb;
    std::vector<cd> first(na + 1), second(nb + 1);
    for (int i = 0; i <= na; ++i) {
        first[i] = binomial(na, i) * std::pow(u, i) * std::pow(v, na - i);
    }
    for (int j = 0; j <= nb; ++j) {
        second[j] = binomial(nb, j) * std::pow(v, j) * std::pow(std::conj(u), nb - j);
    }
    std::vector<cd> coeff(total + 1, cd(0.0));
    for (int i = 0; i <= na; ++i) {
        for (int j = 0; j <= nb; ++j) {
            coeff[i + j] += first[i] * second[j];
        }
    }
    std::vector<cd> amp(total + 1);
    for (int k = 0; k <= total; ++k) {
        amp[k] = coeff[k] * std::sqrt(factorial(k) * factorial(total - k) /
                                      (factorial(na) * factorial(nb)));
    }
    return amp;
}

}  // namespace

TEST_CASE("transfer matrix matches RK4 integration of the mode equations") {
    for (double gamma : {0.0, 0.5, 2.0, std::sqrt(50.0)}) {
        const double period = kPi / std::sqrt(1.0 + gamma * gamma);
        for (double tau : {0.3, 1.7, period, 2.5 * period}) {
            const phtun::TransferMatrix tm = phtun::transfer_matrix({gamma, tau});
            const mat2 m = rk4_transfer(gamma, tau);
            CAPTURE(gamma);
            CAPTURE(tau);
            CHECK(std::abs(tm.u - m[0][0]) < 1e-9);
            CHECK(std::abs(tm.v - m[0][1]) < 1e-9);
            // Structure of the unitary: symmetric off-diagonal, conjugate
            // corner.
            CHECK(std::abs(m[0][1] - m[1][0]) < 1e-9);
            CHECK(std::abs(m[1][1] - std::conj(m[0][0])) < 1e-9);
        }
    }
}

TEST_CASE("transfer matrix hand values at gamma=2, quarter oscillation") {
    // Q = sqrt(5); at tau = pi/(2Q) the cosine vanishes:
    // u = -i 2/sqrt(5), v = -i/sqrt(5), |v|^2 = 1/5 = 1/Q^2.
    const double q = std::sqrt(5.0);
    const phtun::TransferMatrix tm = phtun::transfer_matrix({2.0, kPi / (2.0 * q)});
    CHECK(tm.u.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(tm.u.imag() == doctest::Approx(-2.0 / q).epsilon(1e-14));
    CHECK(tm.v.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(tm.v.imag() == doctest::Approx(-1.0 / q).epsilon(1e-14));
    CHECK(phtun::base_probability({2.0, kPi / (2.0 * q)}) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("base probability peaks at 1/Q^2 and respects the oscillation period") {
    for (double gamma : {0.0, 0.5, 1.0, 3.0}) {
        const double q = std::sqrt(1.0 + gamma * gamma);
        const double period = kPi / q;
        CHECK(phtun::base_probability({gamma, period / 2.0}) ==
              doctest::Approx(1.0 / (q * q)).epsilon(1e-12));
        for (double tau : {0.2, 0.9}) {
            CHECK(phtun::base_probability({gamma, tau}) ==
                  doctest::Approx(phtun::base_probability({gamma, tau + period})).epsilon(1e-12));
        }
    }
}

TEST_CASE("balanced splitting sends one photon across with probability 1/2") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.0, kPi / 4.0});
    const auto one = phtun::TwoModeFockState::basis(1, 0);
    CHECK(phtun::outcome_probability(one, tm, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phtun::outcome_probability(one, tm, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("two photons interfere: balanced splitting never leaves one in each mode") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.0, kPi / 4.0});
    const auto pair = phtun::TwoModeFockState::basis(1, 1);
    CHECK(phtun::outcome_probability(pair, tm, 1) < 1e-14);
    CHECK(phtun::outcome_probability(pair, tm, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phtun::outcome_probability(pair, tm, 2) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("two photons in one mode split binomially at the balanced point") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.0, kPi / 4.0});
    const auto both = phtun::TwoModeFockState::basis(2, 0);
    CHECK(phtun::outcome_probability(both, tm, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(phtun::outcome_probability(both, tm, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(phtun::outcome_probability(both, tm, 2) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("evolve_fock agrees with the polynomial-convolution expansion") {
    for (double gamma : {0.0, 0.7, 2.0}) {
        for (double tau : {0.35, 1.1, 2.8}) {
            const phtun::TransferMatrix tm = phtun::transfer_matrix({gamma, tau});
            for (int total = 0; total <= 10; ++total) {
                for (int na = 0; na <= total; ++na) {
                    const auto evolved =
                        phtun::evolve_fock(phtun::TwoModeFockState::basis(na, total - na), tm);
                    const auto expected = convolution_evolve(na, total - na, tm.u, tm.v);
                    for (int k = 0; k <= total; ++k) {
                        CAPTURE(gamma);
                        CAPTURE(tau);
                        CAPTURE(na);
                        CAPTURE(k);
                        CHECK(std::abs(evolved.amplitudes[k] - expected[k]) < 1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("evolution preserves the norm up to the sector cap") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.5, 1.3});
    for (int total : {1, 7, 30, 60}) {
        phtun::TwoModeFockState uniform;
        uniform.total_photons = total;
        uniform.amplitudes.assign(total + 1, {1.0 / std::sqrt(total + 1.0), 0.0});
        const auto evolved = phtun::evolve_fock(uniform, tm);
        CAPTURE(total);
        CHECK(std::abs(phtun::state_norm(evolved) - 1.0) < 1e-10);
    }
}

TEST_CASE("conjugate transfer matrix undoes the evolution") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({1.0, 0.8});
    const phtun::TransferMatrix back{std::conj(tm.u), std::conj(tm.v)};
    for (int total : {3, 12, 60}) {
        const auto state = phtun::TwoModeFockState::basis(total / 2, total - total / 2);
        const auto round_trip = phtun::evolve_fock(phtun::evolve_fock(state, tm), back);
        for (int k = 0; k <= total; ++k) {
            CHECK(std::abs(round_trip.amplitudes[k] - state.amplitudes[k]) < 1e-9);
        }
    }
}

TEST_CASE("a full half period swaps the mode populations") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.0, kPi / 2.0});
    const auto state = phtun::TwoModeFockState::basis(3, 1);
    CHECK(phtun::outcome_probability(state, tm, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero time evolution is the identity") {
    const phtun::TransferMatrix tm = phtun::transfer_matrix({1.7, 0.0});
    CHECK(tm.u == cd(1.0, 0.0));
    CHECK(tm.v == cd(0.0, 0.0));
    const auto state = phtun::TwoModeFockState::basis(2, 5);
    const auto evolved = phtun::evolve_fock(state, tm);
    for (size_t k = 0; k < state.amplitudes.size(); ++k) {
        CHECK(evolved.amplitudes[k] == state.amplitudes[k]);
    }
}

TEST_CASE("configuration and state validation reject bad inputs") {
    CHECK_THROWS_AS(phtun::q_factor({0.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(phtun::q_factor({std::nan(""), 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(phtun::TwoModeFockState::basis(-1, 0), std::invalid_argument);

    const phtun::TransferMatrix tm = phtun::transfer_matrix({0.0, 0.3});
    CHECK_THROWS_AS(phtun::evolve_fock(phtun::TwoModeFockState::basis(40, 30), tm),
                    std::invalid_argument);

    phtun::TwoModeFockState unnormalized;
    unnormalized.total_photons = 1;
    unnormalized.amplitudes = {{0.5, 0.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(phtun::evolve_fock(unnormalized, tm), std::invalid_argument);

    phtun::TwoModeFockState ragged;
    ragged.total_photons = 2;
    ragged.amplitudes = {{1.0, 0.0}};
    CHECK_THROWS_AS(phtun::evolve_fock(ragged, tm), std::invalid_argument);

    CHECK_THROWS_AS(phtun::evolve_fock(phtun::TwoModeFockState::basis(0, 1), {{1.0, 0.0}, {1.0, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(phtun::outcome_probability(phtun::TwoModeFockState::basis(1, 1), tm, 3),
                    std::out_of_range);
}
