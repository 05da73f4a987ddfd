#pragma once

#include "anharm/model.hpp"

namespace anharm {

/// Truncated oscillator basis: N functions of a harmonic oscillator whose
/// length scale r0 satisfies m w0 r0^2 = hbar and minimizes <H> in level t.
struct BasisSpec {
    int n_basis;  // N >= 2
    int pivot;    // 0 <= t < N
    double r0;    // > 0

    double r0_squared() const { return r0 * r0; }
};

/// <psi_t|H|psi_t> in the oscillator basis of length scale r.
double expectation_in_level(const Model& model, double r, int t);

/// Left side of d<psi_t|H|psi_t>/dr^2 = 0; zero at the optimal scale.
double stationarity_residual(const Model& model, double r, int t);

/// Unique positive root r0 of the stationarity condition. Quartic models
/// reduce to a cubic in r0^2 with one positive root; general models are
/// bracketed by geometric expansion and bisected.
double optimize_r(const Model& model, int t);

/// t = floor(N/2).
int pivot_choice(int n_basis);

BasisSpec make_basis(const Model& model, int n_basis, int pivot);
inline BasisSpec make_basis(const Model& model, int n_basis) {
    return make_basis(model, n_basis, pivot_choice(n_basis));
}

}  // namespace anharm
