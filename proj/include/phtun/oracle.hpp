#ifndef PHTUN_ORACLE_HPP
#define PHTUN_ORACLE_HPP

#include <vector>

#include "phtun/core.hpp"

// Independent verification path: the two-mode coupling Hamiltonian restricted
// to a fixed total-photon-number sector, evolved by real-symmetric
// eigendecomposition. Deliberately ignorant of the transfer matrix and of
// every closed-form probability; agreement with them is the whole point.

namespace phtun {

// Sector Hamiltonian in units of the coupling energy, as a real symmetric
// tridiagonal matrix over basis states |k, N-k> (k photons in mode A):
//   diagonal[k]     = gamma * (2k - N)        (detuning term)
//   off_diagonal[k] = sqrt((k+1)(N-k))        (hopping between k and k+1)
struct SectorHamiltonian {
    int total_photons = 0;
    double gamma = 0.0;
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
};

SectorHamiltonian build_sector(int total_photons, double gamma,
                               int sector_cap = kDefaultSectorCap);

// Eigendecomposition of a sector, reusable across evolution times.
struct SectorEigensystem {
    std::vector<double> eigenvalues;            // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[j][k]
};

SectorEigensystem diagonalize(const SectorHamiltonian& h);

// exp(-i h tau) applied through a precomputed eigensystem.
TwoModeFockState apply_propagator(const SectorEigensystem& eigensystem,
                                  const TwoModeFockState& initial, double tau);

// exp(-i h tau) |initial>; diagonalizes internally.
TwoModeFockState evolve_oracle(const SectorHamiltonian& h, const TwoModeFockState& initial,
                               double tau);

// Outcome probabilities over k = 0..N after evolution.
std::vector<double> oracle_distribution(const SectorHamiltonian& h,
                                        const TwoModeFockState& initial, double tau);

// <state| h |state>, for energy-conservation checks.
double sector_energy(const SectorHamiltonian& h, const TwoModeFockState& state);

}  // namespace phtun

#endif  // PHTUN_ORACLE_HPP
