#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "anharm/basis.hpp"
#include "anharm/errors.hpp"
#include "anharm/model.hpp"
#include "oracles.hpp"

using namespace anharm;

namespace {
const Model kShallow = from_double_well({-2.0, 1.0, 0.0});
}

TEST_CASE("expectation_in_level: harmonic analytic form") {
    const double l2 = 0.5;
    const Model harmonic = make_model({0.0, 0.0, l2}, 1.0, 1.0);
    for (double r : {0.5, 1.0, 2.0}) {
        CHECK(expectation_in_level(harmonic, r, 0) ==
              doctest::Approx(1.0 / (4.0 * r * r) + l2 * r * r / 2.0).epsilon(1e-14));
    }
    // at r^4 = hbar^2/(2 m l2) the value is h?w/2 with w = sqrt(2 l2 / m)
    const double r0 = std::pow(1.0 / (2.0 * l2), 0.25);
    const double omega = std::sqrt(2.0 * l2);
    CHECK(expectation_in_level(harmonic, r0, 0) == doctest::Approx(0.5 * omega).epsilon(1e-14));
    CHECK(expectation_in_level(harmonic, r0, 3) == doctest::Approx(3.5 * omega).epsilon(1e-14));
}

TEST_CASE("expectation_in_level: pure kinetic when the potential vanishes") {
    // lambda2 = 0 is not a valid model, so use a tiny quartic and subtract it
    const Model m = make_model({0.0, 0.0, 0.0, 0.0, 1e-300}, 2.0, 1.5);
    for (int t : {0, 1, 7}) {
        const double expected = 1.5 * 1.5 * (2 * t + 1) / (4.0 * 2.0 * 1.21);
        CHECK(expectation_in_level(m, 1.1, t) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK_THROWS_AS(expectation_in_level(m, 0.0, 0), std::invalid_argument);
}

TEST_CASE("expectation_in_level matches the quadrature oracle at t=20") {
    const double r = std::sqrt(0.34);
    const int t = 20;
    auto v = [&](double q) { return potential_value(kShallow, q); };
    // <phi_t|H|phi_t> with explicit Hermite functions
    const double by_quadrature =
        oracle::matrix_element_quadrature(t, t, r, 1.0, 1.0, v, 20.0 * r, 40001);
    CHECK(expectation_in_level(kShallow, r, t) ==
          doctest::Approx(by_quadrature).epsilon(1e-8));
}

TEST_CASE("stationarity_residual: zero at the harmonic stationary point") {
    const double l2 = 0.7;
    const Model harmonic = make_model({0.0, 0.0, l2}, 1.3, 0.9);
    const double r0 = std::pow(0.9 * 0.9 / (2.0 * 1.3 * l2), 0.25);
    for (int t : {0, 4, 11})
        CHECK(std::abs(stationarity_residual(harmonic, r0, t)) < 1e-12);
}

TEST_CASE("stationarity_residual agrees with finite differences of the expectation") {
    // residual is d<H>/dr^2; compare with a centered difference in x = r^2
    for (int t : {0, 5, 20}) {
        for (double r : {0.5, 0.8, 1.3}) {
            const double x = r * r;
            const double h = 1e-6 * x;
            const double fd = (expectation_in_level(kShallow, std::sqrt(x + h), t) -
                               expectation_in_level(kShallow, std::sqrt(x - h), t)) /
                              (2.0 * h);
            CHECK(stationarity_residual(kShallow, r, t) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("stationarity_residual sign pattern matches the quartic cubic") {
    // (2t+1)(2 l2 x^2 - hbar^2/m) + 6 l4 x^3 (2t^2+2t+1), x = r^2, same
    // zero set as the residual (common positive factor 1/(4 x^2))
    const double l2 = -1.0, l4 = 0.25;
    for (int t : {0, 5, 20}) {
        for (double r : {0.3, 0.6, 0.9, 1.5}) {
            const double x = r * r;
            const double cubic = (2.0 * t + 1.0) * (2.0 * l2 * x * x - 1.0) +
                                 6.0 * l4 * x * x * x * (2.0 * t * (t + 1.0) + 1.0);
            const double res = stationarity_residual(kShallow, r, t);
            CHECK(cubic * res >= 0.0);
            CHECK(res == doctest::Approx(cubic / (4.0 * x * x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("optimize_r: harmonic closed form") {
    const double l2 = 0.5;
    const Model harmonic = make_model({0.0, 0.0, l2}, 1.0, 1.0);
    for (int t : {0, 3, 10})
        CHECK(optimize_r(harmonic, t) ==
              doctest::Approx(std::pow(1.0 / (2.0 * l2), 0.25)).epsilon(1e-14));
}

TEST_CASE("optimize_r: shallow-well values rounded in the reference data") {
    CHECK(optimize_r(kShallow, 5) * optimize_r(kShallow, 5) ==
          doctest::Approx(0.59).epsilon(0.005 / 0.59));
    CHECK(optimize_r(kShallow, 20) * optimize_r(kShallow, 20) ==
          doctest::Approx(0.34).epsilon(0.005 / 0.34));
}

TEST_CASE("optimize_r is independent of the field term") {
    const Model with_field = from_double_well({-2.0, 1.0, 0.7});
    for (int t : {0, 10, 20})
        CHECK(optimize_r(kShallow, t) == optimize_r(with_field, t));
}

TEST_CASE("optimize_r: general bisection path agrees with the cubic path") {
    // degree-6 model exercises the bracketing solver; cross-check by residual
    const Model sextic = make_model({0.0, 0.0, -1.0, 0.0, 0.1, 0.0, 0.05}, 1.0, 1.0);
    for (int t : {0, 7}) {
        const double r0 = optimize_r(sextic, t);
        CHECK(std::abs(stationarity_residual(sextic, r0, t)) < 1e-9);
    }
}

TEST_CASE("optimized r0 is a minimum, not just stationary") {
    for (int t : {0, 5, 20}) {
        const double r0 = optimize_r(kShallow, t);
        const double e = expectation_in_level(kShallow, r0, t);
        CHECK(expectation_in_level(kShallow, r0 * 1.001, t) >= e);
        CHECK(expectation_in_level(kShallow, r0 * 0.999, t) >= e);
    }
}

TEST_CASE("quartic cubic has exactly one positive root") {
    // sign analysis: f(0+) < 0, f(inf) > 0, plus grid root counting
    for (int t : {0, 5, 20}) {
        const double r0 = optimize_r(kShallow, t);
        int sign_changes = 0;
        double prev = stationarity_residual(kShallow, 1e-3, t);
        for (int i = 1; i <= 4000; ++i) {
            const double r = 1e-3 + i * 2.5e-3;
            const double cur = stationarity_residual(kShallow, r, t);
            if ((prev < 0.0) != (cur < 0.0)) ++sign_changes;
            prev = cur;
        }
        CHECK(sign_changes == 1);
        CHECK(r0 > 0.0);
    }
}

TEST_CASE("residual scaling: lambda -> s lambda with hbar^2/m -> s hbar^2/m") {
    const double s = 3.7;
    const Model scaled = make_model({0.0, 0.0, -s, 0.0, s * 0.25}, 1.0, std::sqrt(s));
    for (int t : {0, 5, 20})
        CHECK(optimize_r(scaled, t) == doctest::Approx(optimize_r(kShallow, t)).epsilon(1e-13));
}

TEST_CASE("pivot_choice") {
    CHECK(pivot_choice(40) == 20);
    CHECK(pivot_choice(2) == 1);
    CHECK(pivot_choice(51) == 25);
    CHECK_THROWS_AS(pivot_choice(1), std::invalid_argument);
}

TEST_CASE("make_basis validation") {
    CHECK_THROWS_AS(make_basis(kShallow, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_basis(kShallow, 10, 10), std::invalid_argument);
    const BasisSpec b = make_basis(kShallow, 40);
    CHECK(b.pivot == 20);
    CHECK(std::abs(stationarity_residual(kShallow, b.r0, b.pivot)) < 1e-10);
}
