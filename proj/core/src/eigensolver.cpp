#include "anharm/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "anharm/errors.hpp"

namespace anharm {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

// Householder reduction to tridiagonal form; z holds the accumulated
// orthogonal transform on exit (column-major), d the diagonal, e the
// subdiagonal in e[1..n-1].
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d,
                    std::vector<double>& e) {
    auto a = [&](int r, int c) -> double& { return z[c * n + r]; };

    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of z
// along. Throws after 50 sweeps on any single eigenvalue.
void ql_implicit(std::vector<double>& z, int n, std::vector<double>& d,
                 std::vector<double>& e) {
    auto a = [&](int r, int c) -> double& { return z[c * n + r]; };

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m != l) {
                if (++iter > 50)
                    throw SolverError("eigh: QL failed to converge in 50 sweeps");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = hypot2(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = hypot2(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = a(k, i + 1);
                        a(k, i + 1) = s * a(k, i) + c * f;
                        a(k, i) = c * a(k, i) - s * f;
                    }
                }
                if (underflow && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

double SpectralResult::tail_norm(int n) const {
    const int nb = size();
    if (nb < 2) return 0.0;
    const double c1 = vec(nb - 1, n);
    const double c2 = vec(nb - 2, n);
    return c1 * c1 + c2 * c2;
}

SpectralResult eigh(const SymmetricBandMatrix& matrix, const BasisSpec& basis) {
    const int n = matrix.dimension;
    if (n < 1) throw std::invalid_argument("eigh: empty matrix");
    for (double v : matrix.entries)
        if (!std::isfinite(v)) throw std::invalid_argument("eigh: non-finite entry");

    SpectralResult out;
    out.basis = basis;
    out.eigenvectors = matrix.entries;  // row-major == column-major (symmetric)
    out.eigenvalues.assign(n, 0.0);
    std::vector<double> e(n, 0.0);

    if (n == 1) {
        out.eigenvalues[0] = matrix.entries[0];
        out.eigenvectors[0] = 1.0;
        return out;
    }

    tridiagonalize(out.eigenvectors, n, out.eigenvalues, e);
    ql_implicit(out.eigenvectors, n, out.eigenvalues, e);

    // Sort ascending, carrying columns.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return out.eigenvalues[a] < out.eigenvalues[b]; });
    std::vector<double> vals(n);
    std::vector<double> vecs(out.eigenvectors.size());
    for (int c = 0; c < n; ++c) {
        vals[c] = out.eigenvalues[order[c]];
        for (int r = 0; r < n; ++r)
            vecs[c * n + r] = out.eigenvectors[order[c] * n + r];
    }

    // Largest-magnitude component positive.
    for (int c = 0; c < n; ++c) {
        int imax = 0;
        for (int r = 1; r < n; ++r)
            if (std::abs(vecs[c * n + r]) > std::abs(vecs[c * n + imax])) imax = r;
        if (vecs[c * n + imax] < 0.0)
            for (int r = 0; r < n; ++r) vecs[c * n + r] = -vecs[c * n + r];
    }

    out.eigenvalues = std::move(vals);
    out.eigenvectors = std::move(vecs);
    return out;
}

SpectralResult eigh(const SymmetricBandMatrix& matrix) {
    return eigh(matrix, BasisSpec{matrix.dimension, 0, 1.0});
}

GroundStatePair ground_state_pair(const SpectralResult& result) {
    if (result.size() < 2)
        throw std::invalid_argument("ground_state_pair: need at least two levels");
    const double e0 = result.eigenvalues[0];
    const double e1 = result.eigenvalues[1];
    return GroundStatePair{e0, e1, e1 - e0};
}

}  // namespace anharm
