#pragma once

#include <functional>
#include <vector>

#include "anharm/eigensolver.hpp"
#include "anharm/model.hpp"
#include "anharm/scan.hpp"

namespace anharm {

/// Field-response coefficients of the ground state at p = 0.
struct ResponseCoefficients {
    double e0_at_zero;
    double c1;       // full second-order sum, < 0
    double q01_abs;  // |<0|Q|1>|
    double a;        // fitted tanh-model slope, < 0
    double omega;    // c1 / a, > 0
};

/// Avoided crossing of levels (level_lo, level_lo+1).
struct CrossingAnalysis {
    double p1;
    double gap_min;
    double q11;  // diag Q of the lower level at p1
    double q22;  // diag Q of the upper level at p1
    double c2;   // |Q_{lo,hi}|^2/(E_lo - E_hi), < 0
    int level_lo;
    int level_hi;
    double e_lo;  // E_lo(p1)
    double e_hi;  // E_hi(p1)

    /// Local quadratic models around p1.
    double predict_lo(double dp) const { return e_lo + q11 * dp + c2 * dp * dp; }
    double predict_hi(double dp) const { return e_hi + q22 * dp - c2 * dp * dp; }
};

/// Full second-order field-response coefficient of level 0 at p = 0:
/// sum over m != 0 of |Q_0m|^2 / (E_0 - E_m).
double second_order_c1(const SpectralResult& result);

/// Leading term only: |Q_01|^2 / (E_0 - E_1).
double single_term_c1(const SpectralResult& result);

/// Half-curvature of E_level(p) at p = 0 from the scan grid, centered
/// differences Richardson-extrapolated. Requires a uniform grid symmetric
/// around p = 0.
double curvature_oracle(const FieldScan& scan, int level);

/// -|Q_01|, the degenerate-theory linear slope.
double degenerate_slope(const SpectralResult& result);

/// e0 + a p tanh(omega p).
double response_model(double e0, double a, double omega, double p);

/// Least-squares slope a of the tanh model over the scan's E_0 data with
/// omega pinned to c1/a; golden-section on a in [-3, -0.1].
double fit_response_a(const FieldScan& scan, double c1);

/// Locate the gap minimum of levels (level_lo, level_lo+1) over the given
/// p bracket: coarse 41-point scan, then golden-section to |dp| <= 1e-7.
CrossingAnalysis find_avoided_crossing(const DoubleWellParams& well, int n_basis,
                                       int level_lo, double p_lo, double p_hi);

/// Q11, Q22 and c2 of the local quadratic models at a located crossing.
CrossingAnalysis local_models(const SpectralResult& result_at_p1, int level_lo, double p1);

/// Linear least squares of E_0 against p^(4/3); returns (A, B).
struct AsymptoticFit {
    double a;  // intercept
    double b;  // slope of p^(4/3)
};
AsymptoticFit asymptotic_fit(const std::vector<double>& p_values,
                             const std::vector<double>& e0_values);

}  // namespace anharm
