#include "anharm/wavefunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anharm {

std::vector<double> PositionGrid::points() const {
    if (!(q_min < q_max)) throw std::invalid_argument("PositionGrid: q_min < q_max required");
    if (n_points < 2) throw std::invalid_argument("PositionGrid: need at least 2 points");
    std::vector<double> q(n_points);
    const double step = (q_max - q_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) q[i] = q_min + i * step;
    return q;
}

double ho_function(int s, double r0, double q) {
    if (s < 0) throw std::invalid_argument("ho_function: s must be >= 0");
    if (!(r0 > 0.0)) throw std::invalid_argument("ho_function: r0 must be positive");
    const double x = q / r0;
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi * r0 * r0, -0.25) * std::exp(-0.5 * x * x);
    for (int u = 0; u < s; ++u) {
        const double next =
            std::sqrt(2.0 / (u + 1.0)) * x * cur - std::sqrt(u / (u + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> eigenstate_on_grid(const SpectralResult& result, int n,
                                       const PositionGrid& grid) {
    const int nb = result.size();
    if (n < 0 || n >= nb) throw std::invalid_argument("eigenstate_on_grid: state out of range");
    const double r0 = result.basis.r0;
    const std::vector<double> q = grid.points();
    std::vector<double> psi(q.size(), 0.0);
    for (size_t g = 0; g < q.size(); ++g) {
        // recurrence inline so each point costs one sweep over s
        const double x = q[g] / r0;
        double prev = 0.0;
        double cur = std::pow(std::numbers::pi * r0 * r0, -0.25) * std::exp(-0.5 * x * x);
        double acc = result.vec(0, n) * cur;
        for (int s = 1; s < nb; ++s) {
            const double next =
                std::sqrt(2.0 / s) * x * cur - std::sqrt((s - 1.0) / s) * prev;
            prev = cur;
            cur = next;
            acc += result.vec(s, n) * cur;
        }
        psi[g] = acc;
    }
    return psi;
}

PositionMatrix position_matrix(const SpectralResult& result, int k) {
    const int nb = result.size();
    if (k < 1 || k > nb) throw std::invalid_argument("position_matrix: K must satisfy 1 <= K <= N");
    const double scale = result.basis.r0 / std::sqrt(2.0);

    PositionMatrix q;
    q.size = k;
    q.q_elements.assign(static_cast<size_t>(k) * k, 0.0);

    // X v_n with X the tridiagonal ladder matrix, then project on v_m.
    std::vector<double> xv(nb);
    for (int n = 0; n < k; ++n) {
        for (int s = 0; s < nb; ++s) {
            double v = 0.0;
            if (s > 0) v += std::sqrt(static_cast<double>(s)) * result.vec(s - 1, n);
            if (s + 1 < nb) v += std::sqrt(s + 1.0) * result.vec(s + 1, n);
            xv[s] = scale * v;
        }
        for (int m = 0; m <= n; ++m) {
            double dot = 0.0;
            for (int s = 0; s < nb; ++s) dot += result.vec(s, m) * xv[s];
            q.q_elements[m * k + n] = dot;
            q.q_elements[n * k + m] = dot;
        }
    }
    return q;
}

}  // namespace anharm
