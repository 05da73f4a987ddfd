#include "anharm/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "anharm/factorials.hpp"

namespace anharm {

std::vector<OrderedTerm> ordered_power(int i) {
    if (i < 0) throw std::invalid_argument("ordered_power: i must be >= 0");
    using detail::factorial;
    std::vector<OrderedTerm> terms;
    for (int k = 0; k <= i / 2; ++k) {
        const double prefactor = factorial(i) / (std::pow(2.0, k) * factorial(k));
        for (int j = 0; j <= i - 2 * k; ++j) {
            const int dag = i - 2 * k - j;
            terms.push_back({dag, j, prefactor / (factorial(j) * factorial(dag))});
        }
    }
    return terms;
}

SymmetricBandMatrix assemble(const Model& model, const BasisSpec& basis) {
    const int n = basis.n_basis;
    if (n < 2) throw std::invalid_argument("assemble: N must be >= 2");

    using detail::factorial;
    using detail::factorial_ratio;

    SymmetricBandMatrix h;
    h.dimension = n;
    h.bandwidth = std::max(2, model.degree);
    h.entries.assign(static_cast<size_t>(n) * n, 0.0);

    const double r0 = basis.r0;
    const double kin = model.hbar * model.hbar / (4.0 * model.mass * r0 * r0);

    // Upper triangle s >= t from the operator expansion, mirrored below.
    for (int t = 0; t < n; ++t) {
        h.at(t, t) += kin * (2.0 * t + 1.0);
        if (t + 2 < n)
            h.at(t + 2, t) -= kin * std::sqrt((t + 1.0) * (t + 2.0));

        for (int i = 0; i <= model.degree; ++i) {
            const double li = model.lambda(i);
            if (li == 0.0) continue;
            const double scale = li * std::pow(r0, i) / std::pow(2.0, 0.5 * i);
            for (int k = 0; k <= i / 2; ++k) {
                const double pref = scale * factorial(i) / (std::pow(2.0, k) * factorial(k));
                for (int j = 0; j <= i - 2 * k; ++j) {
                    const int delta = i - 2 * j - 2 * k;  // s - t
                    const int s = t + delta;
                    if (delta < 0 || s >= n || j > t) continue;
                    h.at(s, t) += pref * factorial_ratio(t, delta, j, i - 2 * k - j);
                }
            }
        }
    }
    for (int t = 0; t < n; ++t)
        for (int s = t + 1; s < n; ++s) h.at(t, s) = h(s, t);
    return h;
}

SymmetricBandMatrix position_operator(const BasisSpec& basis) {
    const int n = basis.n_basis;
    SymmetricBandMatrix x;
    x.dimension = n;
    x.bandwidth = 1;
    x.entries.assign(static_cast<size_t>(n) * n, 0.0);
    const double scale = basis.r0 / std::sqrt(2.0);
    for (int t = 0; t + 1 < n; ++t) {
        x.at(t + 1, t) = scale * std::sqrt(t + 1.0);
        x.at(t, t + 1) = x(t + 1, t);
    }
    return x;
}

std::string dump_matrix(const SymmetricBandMatrix& matrix) {
    std::string out;
    char buf[32];
    const int n = matrix.dimension;
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            std::snprintf(buf, sizeof(buf), "%.16e", matrix(s, t));
            out += buf;
            out += (t + 1 < n) ? ' ' : '\n';
        }
    }
    return out;
}

}  // namespace anharm
