#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "anharm/eigensolver.hpp"
#include "anharm/hamiltonian.hpp"
#include "oracles.hpp"

using namespace anharm;

namespace {

SymmetricBandMatrix wrap(std::vector<double> entries, int n) {
    SymmetricBandMatrix m;
    m.dimension = n;
    m.bandwidth = n - 1;
    m.entries = std::move(entries);
    return m;
}

}  // namespace

TEST_CASE("eigh: 2x2 exchange matrix") {
    const SpectralResult res = eigh(wrap({0.0, 1.0, 1.0, 0.0}, 2));
    CHECK(res.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(res.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eigh: identity matrix") {
    const int n = 7;
    std::vector<double> a(n * n, 0.0);
    for (int i = 0; i < n; ++i) a[i * n + i] = 1.0;
    const SpectralResult res = eigh(wrap(a, n));
    for (int i = 0; i < n; ++i) CHECK(res.eigenvalues[i] == 1.0);
    // orthonormality
    for (int c1 = 0; c1 < n; ++c1) {
        for (int c2 = 0; c2 < n; ++c2) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r) dot += res.vec(r, c1) * res.vec(r, c2);
            CHECK(dot == doctest::Approx(c1 == c2 ? 1.0 : 0.0).scale(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("eigh agrees with the Jacobi oracle on seeded random matrices") {
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 10;
        const std::vector<double> a = oracle::random_symmetric(n, 1000 + trial);
        const SpectralResult res = eigh(wrap(a, n));
        const std::vector<double> ref = oracle::jacobi_eigenvalues(a, n);
        for (int i = 0; i < n; ++i)
            CHECK(res.eigenvalues[i] == doctest::Approx(ref[i]).scale(1.0).epsilon(1e-11));
    }
}

TEST_CASE("eigh: orthonormality and residual on a seeded 6x6") {
    const int n = 6;
    const std::vector<double> a = oracle::random_symmetric(n, 42);
    const SpectralResult res = eigh(wrap(a, n));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            double hv = 0.0;
            for (int k = 0; k < n; ++k) hv += a[r * n + k] * res.vec(k, c);
            CHECK(std::abs(hv - res.eigenvalues[c] * res.vec(r, c)) <=
                  1e-10 * (1.0 + std::abs(res.eigenvalues[c])));
        }
    }
}

TEST_CASE("eigh: shift invariance eigh(H + cI) = eigh(H) + c") {
    const int n = 9;
    std::vector<double> a = oracle::random_symmetric(n, 7);
    const SpectralResult base = eigh(wrap(a, n));
    const double c = 5.0;
    for (int i = 0; i < n; ++i) a[i * n + i] += c;
    const SpectralResult shifted = eigh(wrap(a, n));
    for (int i = 0; i < n; ++i)
        CHECK(shifted.eigenvalues[i] ==
              doctest::Approx(base.eigenvalues[i] + c).scale(1.0).epsilon(1e-12));
}

TEST_CASE("eigh: count preserved and sorted ascending") {
    const int n = 12;
    const SpectralResult res = eigh(wrap(oracle::random_symmetric(n, 99), n));
    CHECK(res.size() == n);
    for (int i = 1; i < n; ++i) CHECK(res.eigenvalues[i] >= res.eigenvalues[i - 1]);
}

TEST_CASE("eigh: deterministic repeat") {
    const int n = 10;
    const std::vector<double> a = oracle::random_symmetric(n, 314);
    const SpectralResult r1 = eigh(wrap(a, n));
    const SpectralResult r2 = eigh(wrap(a, n));
    CHECK(r1.eigenvalues == r2.eigenvalues);
    CHECK(r1.eigenvectors == r2.eigenvectors);
}

TEST_CASE("eigh rejects non-finite input") {
    CHECK_THROWS_AS(eigh(wrap({0.0, 1.0, 1.0, std::nan("")}, 2)), std::invalid_argument);
}

TEST_CASE("ground_state_pair") {
    const SpectralResult res = eigh(wrap({0.0, 1.0, 1.0, 0.0}, 2));
    const auto [e0, e1, gap] = ground_state_pair(res);
    CHECK(e0 == doctest::Approx(-1.0));
    CHECK(e1 == doctest::Approx(1.0));
    CHECK(gap == doctest::Approx(2.0));

    SpectralResult tiny;
    tiny.eigenvalues = {1.0};
    tiny.eigenvectors = {1.0};
    CHECK_THROWS_AS(ground_state_pair(tiny), std::invalid_argument);
}
