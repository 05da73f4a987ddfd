#pragma once

#include <vector>

#include "anharm/eigensolver.hpp"

namespace anharm {

struct PositionGrid {
    double q_min;
    double q_max;
    int n_points;

    std::vector<double> points() const;
};

/// K x K matrix Q_mn = <psi_m|Q|psi_n> over the lowest K eigenstates,
/// signed; diagonal signs are physical, off-diagonal signs follow the
/// eigenvector convention.
struct PositionMatrix {
    int size = 0;
    std::vector<double> q_elements;  // row-major

    double operator()(int m, int n) const { return q_elements[m * size + n]; }
};

/// Normalized oscillator eigenfunction phi_s(q) for length scale r0,
/// evaluated with the stable recurrence on normalized functions.
double ho_function(int s, double r0, double q);

/// psi_n(q) = sum_s c_ns phi_s(q) on each grid point.
std::vector<double> eigenstate_on_grid(const SpectralResult& result, int n,
                                       const PositionGrid& grid);

/// Algebraic Q matrix via ladder elements, no quadrature.
PositionMatrix position_matrix(const SpectralResult& result, int k);

}  // namespace anharm
