#include "anharm/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anharm/errors.hpp"
#include "anharm/wavefunction.hpp"

namespace anharm {

namespace {

// Q_{n,m} for all m, via the tridiagonal ladder matrix.
std::vector<double> q_row(const SpectralResult& result, int n) {
    const int nb = result.size();
    const double scale = result.basis.r0 / std::sqrt(2.0);
    std::vector<double> xv(nb);
    for (int s = 0; s < nb; ++s) {
        double v = 0.0;
        if (s > 0) v += std::sqrt(static_cast<double>(s)) * result.vec(s - 1, n);
        if (s + 1 < nb) v += std::sqrt(s + 1.0) * result.vec(s + 1, n);
        xv[s] = scale * v;
    }
    std::vector<double> row(nb);
    for (int m = 0; m < nb; ++m) {
        double dot = 0.0;
        for (int s = 0; s < nb; ++s) dot += result.vec(s, m) * xv[s];
        row[m] = dot;
    }
    return row;
}

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_min(F f, double lo, double hi, double tol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double second_order_c1(const SpectralResult& result) {
    const std::vector<double> q0 = q_row(result, 0);
    double sum = 0.0;
    for (int m = 1; m < result.size(); ++m)
        sum += q0[m] * q0[m] / (result.eigenvalues[0] - result.eigenvalues[m]);
    return sum;
}

double single_term_c1(const SpectralResult& result) {
    if (result.size() < 2) throw std::invalid_argument("single_term_c1: need two levels");
    const PositionMatrix q = position_matrix(result, 2);
    const double q01 = q(0, 1);
    return q01 * q01 / (result.eigenvalues[0] - result.eigenvalues[1]);
}

double curvature_oracle(const FieldScan& scan, int level) {
    const int np = scan.points();
    if (level < 0 || level >= scan.levels)
        throw std::invalid_argument("curvature_oracle: level out of range");
    int zero = -1;
    for (int j = 0; j < np; ++j)
        if (std::abs(scan.p_values[j]) < 1e-15) zero = j;
    if (zero < 2 || zero + 2 >= np)
        throw AnalysisError("curvature_oracle: grid must hold p = 0 with two symmetric neighbours");
    const double h = scan.p_values[zero + 1] - scan.p_values[zero];

    auto half_curv = [&](int off) {
        const double num = scan.energy(level, zero + off) - 2.0 * scan.energy(level, zero) +
                           scan.energy(level, zero - off);
        const double d = off * h;
        return num / (2.0 * d * d);
    };
    // Richardson: errors are O(d^2), so (4 c(h) - c(2h)) / 3.
    return (4.0 * half_curv(1) - half_curv(2)) / 3.0;
}

double degenerate_slope(const SpectralResult& result) {
    const PositionMatrix q = position_matrix(result, 2);
    return -std::abs(q(0, 1));
}

double response_model(double e0, double a, double omega, double p) {
    if (!(omega > 0.0)) throw std::invalid_argument("response_model: omega must be positive");
    return e0 + a * p * std::tanh(omega * p);
}

double fit_response_a(const FieldScan& scan, double c1) {
    if (scan.points() < 5) throw AnalysisError("fit_response_a: need at least 5 points");
    int zero = 0;
    for (int j = 1; j < scan.points(); ++j)
        if (std::abs(scan.p_values[j]) < std::abs(scan.p_values[zero])) zero = j;
    if (std::abs(scan.p_values[zero]) > 1e-12)
        throw AnalysisError("fit_response_a: fit window must contain p = 0");
    const double e0 = scan.energy(0, zero);
    auto sse = [&](double a) {
        double s = 0.0;
        const double omega = c1 / a;
        for (int j = 0; j < scan.points(); ++j) {
            const double p = scan.p_values[j];
            const double r = scan.energy(0, j) - (e0 + a * p * std::tanh(omega * p));
            s += r * r;
        }
        return s;
    };
    return golden_min(sse, -3.0, -0.1, 1e-10);
}

CrossingAnalysis local_models(const SpectralResult& result_at_p1, int level_lo, double p1) {
    const int hi = level_lo + 1;
    if (hi >= result_at_p1.size())
        throw std::invalid_argument("local_models: level out of range");
    const PositionMatrix q = position_matrix(result_at_p1, hi + 1);
    const double e_lo = result_at_p1.eigenvalues[level_lo];
    const double e_hi = result_at_p1.eigenvalues[hi];
    const double q_off = q(level_lo, hi);
    CrossingAnalysis out;
    out.p1 = p1;
    out.gap_min = e_hi - e_lo;
    out.q11 = q(level_lo, level_lo);
    out.q22 = q(hi, hi);
    out.c2 = q_off * q_off / (e_lo - e_hi);
    out.level_lo = level_lo;
    out.level_hi = hi;
    out.e_lo = e_lo;
    out.e_hi = e_hi;
    return out;
}

CrossingAnalysis find_avoided_crossing(const DoubleWellParams& well, int n_basis,
                                       int level_lo, double p_lo, double p_hi) {
    if (!(p_lo < p_hi)) throw std::invalid_argument("find_avoided_crossing: bad bracket");
    const int hi = level_lo + 1;
    DoubleWellParams shape = well;
    shape.p = 0.0;
    const BasisSpec basis = make_basis(from_double_well(shape), n_basis);

    auto spectrum_at = [&](double p) {
        DoubleWellParams w = well;
        w.p = p;
        return eigh(assemble(from_double_well(w), basis), basis);
    };
    auto gap_at = [&](double p) {
        const SpectralResult r = spectrum_at(p);
        return r.eigenvalues[hi] - r.eigenvalues[level_lo];
    };

    // Coarse scan: the gap minimum must be interior.
    const int coarse = 41;
    int jmin = 0;
    double gmin = 0.0;
    std::vector<double> ps(coarse);
    for (int j = 0; j < coarse; ++j) {
        ps[j] = p_lo + j * (p_hi - p_lo) / (coarse - 1);
        const double g = gap_at(ps[j]);
        if (j == 0 || g < gmin) {
            gmin = g;
            jmin = j;
        }
    }
    if (jmin == 0 || jmin == coarse - 1)
        throw AnalysisError("find_avoided_crossing: no interior gap minimum on bracket");

    const double p1 = golden_min(gap_at, ps[jmin - 1], ps[jmin + 1], 1e-7);
    return local_models(spectrum_at(p1), level_lo, p1);
}

AsymptoticFit asymptotic_fit(const std::vector<double>& p_values,
                             const std::vector<double>& e0_values) {
    const size_t n = p_values.size();
    if (n < 5 || e0_values.size() != n)
        throw AnalysisError("asymptotic_fit: need at least 5 matched points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double x = std::pow(p_values[j], 4.0 / 3.0);
        sx += x;
        sy += e0_values[j];
        sxx += x * x;
        sxy += x * e0_values[j];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw AnalysisError("asymptotic_fit: degenerate design");
    const double b = (n * sxy - sx * sy) / det;
    const double a = (sy - b * sx) / n;
    return AsymptoticFit{a, b};
}

}  // namespace anharm
