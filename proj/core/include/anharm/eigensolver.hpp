#pragma once

#include <vector>

#include "anharm/basis.hpp"
#include "anharm/hamiltonian.hpp"

namespace anharm {

/// Full spectrum of a symmetric matrix: ascending eigenvalues with
/// orthonormal eigenvectors, column n = coefficients of state n in the
/// oscillator basis.
struct SpectralResult {
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // column-major, n x n
    BasisSpec basis{0, 0, 1.0};

    int size() const { return static_cast<int>(eigenvalues.size()); }
    double vec(int row, int col) const { return eigenvectors[col * size() + row]; }

    /// Fraction of state n living in the top two basis coefficients; values
    /// above ~1e-6 indicate a truncation-limited state.
    double tail_norm(int n) const;
    bool converged(int n, double tol = 1e-6) const { return tail_norm(n) < tol; }
};

/// Householder tridiagonalization + implicit-shift QL. Deterministic;
/// throws SolverError if any eigenvalue fails to converge in 50 sweeps.
/// Sign convention: largest-magnitude component of each vector positive.
SpectralResult eigh(const SymmetricBandMatrix& matrix);
SpectralResult eigh(const SymmetricBandMatrix& matrix, const BasisSpec& basis);

struct GroundStatePair {
    double e0;
    double e1;
    double gap;
};

GroundStatePair ground_state_pair(const SpectralResult& result);

}  // namespace anharm
