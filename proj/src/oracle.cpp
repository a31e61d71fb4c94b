#include "phtun/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace phtun {

namespace {

void require_matching_sector(const SectorHamiltonian& h, const TwoModeFockState& state) {
    if (state.total_photons != h.total_photons) {
        throw std::invalid_argument("state and Hamiltonian belong to different sectors");
    }
    if (state.amplitudes.size() != static_cast<size_t>(state.total_photons) + 1) {
        throw std::invalid_argument("amplitude count must be total_photons + 1");
    }
}

}  // namespace

SectorHamiltonian build_sector(int total_photons, double gamma, int sector_cap) {
    if (total_photons < 0) {
        throw std::invalid_argument("total photon number must be non-negative");
    }
    if (total_photons > sector_cap) {
        throw std::invalid_argument("total photon number exceeds the sector cap");
    }
    SectorHamiltonian h;
    h.total_photons = total_photons;
    h.gamma = gamma;
    h.diagonal.resize(total_photons + 1);
    h.off_diagonal.resize(total_photons > 0 ? total_photons : 0);
    for (int k = 0; k <= total_photons; ++k) {
        h.diagonal[k] = gamma * (2.0 * k - total_photons);
    }
    for (int k = 0; k < total_photons; ++k) {
        h.off_diagonal[k] = std::sqrt(double(k + 1) * double(total_photons - k));
    }
    return h;
}

SectorEigensystem diagonalize(const SectorHamiltonian& h) {
    const int dim = h.total_photons + 1;
    Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        matrix(k, k) = h.diagonal[k];
    }
    for (int k = 0; k + 1 < dim; ++k) {
        matrix(k, k + 1) = h.off_diagonal[k];
        matrix(k + 1, k) = h.off_diagonal[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("sector eigendecomposition failed");
    }

    SectorEigensystem eig;
    eig.eigenvalues.resize(dim);
    eig.eigenvectors.resize(dim, std::vector<double>(dim));
    for (int j = 0; j < dim; ++j) {
        eig.eigenvalues[j] = solver.eigenvalues()(j);
        for (int k = 0; k < dim; ++k) {
            eig.eigenvectors[j][k] = solver.eigenvectors()(k, j);
        }
    }
    return eig;
}

TwoModeFockState apply_propagator(const SectorEigensystem& eigensystem,
                                  const TwoModeFockState& initial, double tau) {
    const int dim = static_cast<int>(initial.amplitudes.size());
    if (static_cast<int>(eigensystem.eigenvalues.size()) != dim) {
        throw std::invalid_argument("eigensystem and state dimensions differ");
    }

    TwoModeFockState result;
    result.total_photons = initial.total_photons;
    result.amplitudes.assign(dim, {0.0, 0.0});
    for (int j = 0; j < dim; ++j) {
        const auto& vec = eigensystem.eigenvectors[j];
        std::complex<double> projection(0.0, 0.0);
        for (int k = 0; k < dim; ++k) {
            projection += vec[k] * initial.amplitudes[k];
        }
        const std::complex<double> phase = std::polar(1.0, -eigensystem.eigenvalues[j] * tau);
        const std::complex<double> coeff = phase * projection;
        for (int k = 0; k < dim; ++k) {
            result.amplitudes[k] += coeff * vec[k];
        }
    }
    return result;
}

TwoModeFockState evolve_oracle(const SectorHamiltonian& h, const TwoModeFockState& initial,
                               double tau) {
    require_matching_sector(h, initial);
    return apply_propagator(diagonalize(h), initial, tau);
}

std::vector<double> oracle_distribution(const SectorHamiltonian& h,
                                        const TwoModeFockState& initial, double tau) {
    const TwoModeFockState evolved = evolve_oracle(h, initial, tau);
    std::vector<double> probabilities(evolved.amplitudes.size());
    for (size_t k = 0; k < evolved.amplitudes.size(); ++k) {
        probabilities[k] = std::norm(evolved.amplitudes[k]);
    }
    return probabilities;
}

double sector_energy(const SectorHamiltonian& h, const TwoModeFockState& state) {
    require_matching_sector(h, state);
    const int dim = h.total_photons + 1;
    double energy = 0.0;
    for (int k = 0; k < dim; ++k) {
        energy += h.diagonal[k] * std::norm(state.amplitudes[k]);
    }
    for (int k = 0; k + 1 < dim; ++k) {
        energy += 2.0 * h.off_diagonal[k] *
                  (std::conj(state.amplitudes[k]) * state.amplitudes[k + 1]).real();
    }
    return energy;
}

}  // namespace phtun
