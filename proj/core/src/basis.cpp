#include "anharm/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "anharm/errors.hpp"
#include "anharm/factorials.hpp"

namespace anharm {

namespace {

// Sum over even i of the potential part of <psi_t|H|psi_t>, with an extra
// factor i/(2 r^2) per term when differentiated (see stationarity_residual).
double even_sum(const Model& model, double r, int t, bool differentiated) {
    using detail::factorial;
    using detail::falling_product;
    double sum = 0.0;
    for (int i = differentiated ? 2 : 0; i <= model.degree; i += 2) {
        const double li = model.lambda(i);
        if (li == 0.0) continue;
        const int half = i / 2;
        const double ri = std::pow(r, differentiated ? i - 2 : i);
        for (int k = 0; k <= half; ++k) {
            const int drop = half - k;  // annihilations below level t
            const double tfall = falling_product(t, drop);
            if (tfall == 0.0 && drop > t) continue;
            const double denom = std::pow(2.0, half + k) * factorial(k) *
                                 factorial(drop) * factorial(drop);
            double term = li * ri * factorial(i) * tfall / denom;
            if (differentiated) term *= 0.5 * i;
            sum += term;
        }
    }
    return sum;
}

}  // namespace

double expectation_in_level(const Model& model, double r, int t) {
    if (!(r > 0.0)) throw std::invalid_argument("expectation_in_level: r must be positive");
    if (t < 0) throw std::invalid_argument("expectation_in_level: t must be >= 0");
    const double kinetic =
        model.hbar * model.hbar * (2.0 * t + 1.0) / (4.0 * model.mass * r * r);
    return kinetic + even_sum(model, r, t, false);
}

double stationarity_residual(const Model& model, double r, int t) {
    if (!(r > 0.0)) throw std::invalid_argument("stationarity_residual: r must be positive");
    if (t < 0) throw std::invalid_argument("stationarity_residual: t must be >= 0");
    const double kinetic = -model.hbar * model.hbar * (2.0 * t + 1.0) /
                           (4.0 * model.mass * std::pow(r, 4));
    return kinetic + even_sum(model, r, t, true);
}

namespace {

// Cubic in x = r0^2 for quartic models:
//   6 l4 (2t^2+2t+1) x^3 + 2 l2 (2t+1) x^2 - (2t+1) hbar^2/m = 0.
double solve_quartic_cubic(const Model& model, int t) {
    const double l2 = model.lambda(2);
    const double l4 = model.lambda(4);
    const double h2m = model.hbar * model.hbar / model.mass;
    const double tw = 2.0 * t + 1.0;

    if (l4 == 0.0) {
        if (!(l2 > 0.0)) throw SolverError("optimize_r: harmonic model needs lambda2 > 0");
        return std::sqrt(std::sqrt(h2m / (2.0 * l2)));
    }

    const double c3 = 6.0 * l4 * (2.0 * t * (t + 1.0) + 1.0);
    const double c2 = 2.0 * l2 * tw;
    const double c0 = -tw * h2m;
    auto f = [&](double x) { return ((c3 * x + c2) * x) * x + c0; };
    auto df = [&](double x) { return (3.0 * c3 * x + 2.0 * c2) * x; };

    // f(0) < 0 and f -> +inf, so one sign change brackets the positive root.
    double lo = 0.0;
    double hi = std::max({1.0, std::sqrt(h2m / (2.0 * std::abs(l2) + 1e-300)),
                          std::cbrt(-c0 / c3)});
    while (f(hi) < 0.0) hi *= 2.0;

    double x = l2 != 0.0 ? std::sqrt(h2m / (2.0 * std::abs(l2))) : std::cbrt(-c0 / c3);
    if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx < 0.0) lo = x; else hi = x;
        const double d = df(x);
        double next = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-16 * x) { x = next; break; }
        x = next;
    }
    return std::sqrt(x);
}

double solve_general(const Model& model, int t) {
    auto f = [&](double r) { return stationarity_residual(model, r, t); };
    // residual is -inf-like at r -> 0 and positive once the leading even
    // term dominates; expand geometrically from r = 1 to find the change.
    double lo = 1.0, hi = 1.0;
    if (f(1.0) < 0.0) {
        bool found = false;
        for (int d = 0; d < 60; ++d) {
            hi *= 2.0;
            if (f(hi) > 0.0) { found = true; break; }
            lo = hi;
        }
        if (!found) throw SolverError("optimize_r: no sign change within 60 doublings");
    } else {
        bool found = false;
        for (int d = 0; d < 60; ++d) {
            lo *= 0.5;
            if (f(lo) < 0.0) { found = true; break; }
            hi = lo;
        }
        if (!found) throw SolverError("optimize_r: no sign change within 60 halvings");
    }
    while (hi - lo > 1e-14 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double optimize_r(const Model& model, int t) {
    if (t < 0) throw std::invalid_argument("optimize_r: t must be >= 0");
    if (model.degree <= 4) return solve_quartic_cubic(model, t);
    return solve_general(model, t);
}

int pivot_choice(int n_basis) {
    if (n_basis < 2) throw std::invalid_argument("pivot_choice: n_basis must be >= 2");
    return n_basis / 2;
}

BasisSpec make_basis(const Model& model, int n_basis, int pivot) {
    if (n_basis < 2) throw std::invalid_argument("make_basis: n_basis must be >= 2");
    if (pivot < 0 || pivot >= n_basis)
        throw std::invalid_argument("make_basis: pivot must satisfy 0 <= t < N");
    return BasisSpec{n_basis, pivot, optimize_r(model, pivot)};
}

}  // namespace anharm
