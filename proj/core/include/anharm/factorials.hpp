#pragma once

#include <cmath>

namespace anharm::detail {

/// n! for small n (combinatorial prefactors; n <= 20 stays exact in double).
inline double factorial(int n) {
    double f = 1.0;
    for (int u = 2; u <= n; ++u) f *= u;
    return f;
}

/// t (t-1) ... (t-count+1). Returns 0 if count exceeds t+1 (the implicit
/// 1/negative-factorial convention).
inline double falling_product(int t, int count) {
    if (count < 0 || count > t + 1) return 0.0;
    double f = 1.0;
    for (int u = 0; u < count; ++u) f *= static_cast<double>(t - u);
    return f;
}

/// sqrt(t! (t+delta)!) / (j! (t-j)! mfac!), the combinatorial weight of the
/// oscillator-basis matrix elements. The two large factorials are reduced
/// against (t-j)! before the square root, so only short products of order-t
/// factors remain and t in the hundreds cannot overflow. Negative arguments
/// mean an annihilated low level: the term is dropped (returns 0).
inline double factorial_ratio(int t, int delta, int j, int mfac) {
    if (t < 0 || t + delta < 0 || j < 0 || t - j < 0 || mfac < 0) return 0.0;
    // t!/(t-j)! and (t+delta)!/(t-j)!
    double left = falling_product(t, j);
    double right = falling_product(t + delta, j + delta);
    return std::sqrt(left * right) / (factorial(j) * factorial(mfac));
}

}  // namespace anharm::detail
