#pragma once

#include <iosfwd>
#include <vector>

#include "anharm/basis.hpp"
#include "anharm/model.hpp"

namespace anharm {

/// Eigenvalue curves E_n(p) with diagonal position elements Q_nn(p),
/// computed in one shared basis (r0 does not depend on p).
struct FieldScan {
    std::vector<double> p_values;
    int levels = 0;
    std::vector<double> energies;  // levels x len(p), row-major by level
    std::vector<double> q_diag;    // same layout
    BasisSpec basis{0, 0, 1.0};

    int points() const { return static_cast<int>(p_values.size()); }
    double energy(int level, int j) const { return energies[level * points() + j]; }
    double qdiag(int level, int j) const { return q_diag[level * points() + j]; }
};

struct ConvergenceRow {
    int n_basis;
    double r0_squared;
    double e0;
    double e1;
    double c1;
    double a;
};
using ConvergenceTable = std::vector<ConvergenceRow>;

std::vector<double> make_grid(double p_min, double p_max, double p_step);

/// One optimize_r, then per-p assemble + diagonalize + Q diagonal.
/// threads = 0 means hardware concurrency; output independent of thread count.
FieldScan scan_field(const DoubleWellParams& well, const std::vector<double>& p_grid,
                     int n_basis, int levels, int threads = 0);

/// Table rows (N, r0^2, E_0, E_1, c1, a) with t = floor(N/2); the tanh fit
/// runs over fit_window (a p grid, typically [0, 0.6] step 0.01).
ConvergenceTable convergence_study(const DoubleWellParams& well,
                                   const std::vector<int>& n_list,
                                   const std::vector<double>& fit_window,
                                   int threads = 0);

/// max over levels and interior grid points of |centered dE/dp + Q_nn|.
double hellmann_feynman_check(const FieldScan& scan);

/// CSV: header p,E0,...,Q00,...; 12 significant digits, one row per point.
void write_scan_csv(const FieldScan& scan, std::ostream& out);
FieldScan read_scan_csv(std::istream& in);

}  // namespace anharm
