// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "bcsgap/gap_equation.hpp"

using namespace bcsgap;
using gap_equation::MaterialParams;
using gap_equation::ReducedPoint;
using gap_equation::Region;
using quadrature::QuadratureConfig;

namespace {

const MaterialParams kParams{0.3, 1.0, 1.0};
const QuadratureConfig kQc{};

// reduced constants for lambda = 0.3, frozen from a high-precision solve
constexpr double kTauC = 0.0404495251908900797938;
constexpr double kDelta0 = 0.07143890225624670546324;

ReducedPoint at(double tau, double y) { return ReducedPoint{tau, y, Region::W1}; }

} // namespace

TEST_CASE("MaterialParams validation") {
    CHECK_THROWS_AS((MaterialParams{-0.3, 1.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((MaterialParams{0.0, 1.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((MaterialParams{0.3, 0.0, 1.0}.validate()), DomainError);
    CHECK_THROWS_AS((MaterialParams{0.3, 1.0, -1.0}.validate()), DomainError);
    CHECK_NOTHROW((MaterialParams{0.3, 1.0, 1.0}.validate()));
}

TEST_CASE("classify_point region tags and rejections") {
    const double y0 = kDelta0 * kDelta0;
    CHECK(gap_equation::classify_point(0.5 * kTauC, 0.5 * y0, kTauC, kDelta0).region ==
          Region::W1);
    CHECK(gap_equation::classify_point(0.0, 0.5 * y0, kTauC, kDelta0).region == Region::W2);
    CHECK(gap_equation::classify_point(0.5 * kTauC, 0.0, kTauC, kDelta0).region == Region::W3);
    CHECK(gap_equation::classify_point(kTauC, 0.5 * y0, kTauC, kDelta0).region == Region::W4);
    CHECK(gap_equation::classify_point(0.0, y0, kTauC, kDelta0).region == Region::Boundary0);
    CHECK(gap_equation::classify_point(kTauC, 0.0, kTauC, kDelta0).region ==
          Region::BoundaryTc);

    CHECK_THROWS_AS(gap_equation::classify_point(0.0, 0.0, kTauC, kDelta0), DomainError);
    CHECK_THROWS_AS(gap_equation::classify_point(1.01 * kTauC, 0.0, kTauC, kDelta0),
                    DomainError);
    CHECK_THROWS_AS(gap_equation::classify_point(0.5 * kTauC, 2.0 * y0, kTauC, kDelta0),
                    DomainError);
    CHECK_THROWS_AS(gap_equation::classify_point(-1e-9, 0.5 * y0, kTauC, kDelta0),
                    DomainError);
}

TEST_CASE("F vanishes at both known zeros") {
    // coupling 1/asinh(1) makes delta0 = 1, so F(0, 1) = 0
    const MaterialParams unit{1.0 / std::asinh(1.0), 1.0, 1.0};
    CHECK(std::abs(gap_equation::F_value(at(0.0, 1.0), unit, kQc)) <= 1e-10);

    CHECK(std::abs(gap_equation::F_value(at(0.0, kDelta0 * kDelta0), kParams, kQc)) <= 1e-9);
    CHECK(std::abs(gap_equation::F_value(at(kTauC, 0.0), kParams, kQc)) <= 1e-9);
    CHECK_THROWS_AS(gap_equation::F_value(at(0.0, 0.0), kParams, kQc), DomainError);
}

TEST_CASE("F is strictly decreasing in y and in tau") {
    const double y0 = kDelta0 * kDelta0;
    for (double ft : {0.2, 0.5, 0.8}) {
        for (double fy : {0.1, 0.4, 0.8}) {
            const double base = gap_equation::F_value(at(ft * kTauC, fy * y0), kParams, kQc);
            CHECK(gap_equation::F_value(at(ft * kTauC, (fy + 0.1) * y0), kParams, kQc) < base);
            CHECK(gap_equation::F_value(at((ft + 0.1) * kTauC, fy * y0), kParams, kQc) < base);
        }
    }
}

TEST_CASE("F_T: zero edge, closed form at y = 0, negativity") {
    CHECK(gap_equation::F_T(at(0.0, 0.04), kParams, kQc) == 0.0);

    // at (tau, 0): -(1/(2 tau^2)) * 2 tau tanh(1/(2 tau)) = -tanh(1/(2 tau))/tau
    const double tau = 0.25;
    CHECK(gap_equation::F_T(at(tau, 0.0), kParams, kQc) ==
          doctest::Approx(-3.856110320303267535786).epsilon(1e-10));

    CHECK(gap_equation::F_T(at(0.5 * kTauC, 0.3 * kDelta0 * kDelta0), kParams, kQc) < 0.0);
}

TEST_CASE("F_Y: closed zero-temperature edge and quadrature cross-check") {
    // reduced closed form -1/(2 y0 sqrt(1 + y0)) at y0 = 0.25
    const double closed = gap_equation::F_Y(at(0.0, 0.25), kParams, kQc);
    CHECK(closed == doctest::Approx(-1.788854381999831757127).epsilon(1e-15));

    const auto quad = quadrature::integrate(
        [](double eps) { return -0.5 / std::pow(eps * eps + 0.25, 1.5); }, kQc);
    CHECK(std::abs(closed - quad.value) <= 1e-10);

    // frozen high-precision value at (tau_c, 0)
    CHECK(gap_equation::F_Y(at(kTauC, 0.0), kParams, kQc) ==
          doctest::Approx(-64.88380930130370702148).epsilon(1e-11));

    CHECK(gap_equation::F_Y(at(0.7 * kTauC, 0.5 * kDelta0 * kDelta0), kParams, kQc) < 0.0);
}

TEST_CASE("second partials agree with finite differences of the first") {
    const double tau = 0.6 * kTauC;
    const double y = 0.5 * kDelta0 * kDelta0;
    const QuadratureConfig tight{1e-14, 1e-13, 60};

    const double ht = 1e-4 * kTauC;
    const double ftt_fd = (gap_equation::F_T(at(tau + ht, y), kParams, tight) -
                           gap_equation::F_T(at(tau - ht, y), kParams, tight)) /
                          (2.0 * ht);
    const double ftt = gap_equation::F_TT(at(tau, y), kParams, tight);
    CHECK(std::abs(ftt_fd - ftt) <= 1e-6 * std::abs(ftt));

    const double hy = 1e-4 * kDelta0 * kDelta0;
    const double fty_fd = (gap_equation::F_T(at(tau, y + hy), kParams, tight) -
                           gap_equation::F_T(at(tau, y - hy), kParams, tight)) /
                          (2.0 * hy);
    const double fty = gap_equation::F_TY(at(tau, y), kParams, tight);
    CHECK(std::abs(fty_fd - fty) <= 1e-6 * std::abs(fty));

    // mixed-partial symmetry: the same value from the other variable order
    const double fty_fd2 = (gap_equation::F_Y(at(tau + ht, y), kParams, tight) -
                            gap_equation::F_Y(at(tau - ht, y), kParams, tight)) /
                           (2.0 * ht);
    CHECK(std::abs(fty_fd2 - fty) <= 1e-6 * std::abs(fty));

    const double fyy_fd = (gap_equation::F_Y(at(tau, y + hy), kParams, tight) -
                           gap_equation::F_Y(at(tau, y - hy), kParams, tight)) /
                          (2.0 * hy);
    const double fyy = gap_equation::F_YY(at(tau, y), kParams, tight);
    CHECK(std::abs(fyy_fd - fyy) <= 1e-6 * std::abs(fyy));
}

TEST_CASE("F_TY is positive on the interior") {
    for (double ft : {0.3, 0.6, 0.9})
        CHECK(gap_equation::F_TY(at(ft * kTauC, 0.4 * kDelta0 * kDelta0), kParams, kQc) > 0.0);
}

TEST_CASE("first partials are negative at random interior points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.02, 0.98);
    for (int i = 0; i < 24; ++i) {
        const double tau = unit(rng) * kTauC;
        const double y = unit(rng) * 2.0 * kDelta0 * kDelta0;
        CHECK(gap_equation::F_T(at(tau, y), kParams, kQc) < 0.0);
        CHECK(gap_equation::F_Y(at(tau, y), kParams, kQc) < 0.0);
    }
}

TEST_CASE("second partials reject the tau = 0 edge") {
    CHECK_THROWS_AS(gap_equation::F_TT(at(0.0, 0.25), kParams, kQc), DomainError);
    CHECK_THROWS_AS(gap_equation::F_TY(at(0.0, 0.25), kParams, kQc), DomainError);
    CHECK_THROWS_AS(gap_equation::F_YY(at(0.0, 0.25), kParams, kQc), DomainError);
}

TEST_CASE("F_TT vanishes exponentially as tau -> 0 with y > 0") {
    // the sech^2 weight is ~exp(-sqrt(y)/tau); at tau = 1e-3, y = 0.25 this
    // underflows double range entirely
    CHECK(std::abs(gap_equation::F_TT(at(1e-3, 0.25), kParams, kQc)) < 1e-200);
}

TEST_CASE("quadrature exhaustion propagates out of the evaluators") {
    // one allowed bisection level cannot reach a 1e-15 tolerance here
    const QuadratureConfig starved{1e-15, 1e-15, 1};
    CHECK_THROWS_AS(
        gap_equation::F_value(at(0.5 * kTauC, 0.5 * kDelta0 * kDelta0), kParams, starved),
        ToleranceNotReached);
}

TEST_CASE("F_YY approaches its G(0) form when eta stays small") {
    // for tau >> 1 the integrand is G(eps/(2 tau)) ~ G(0) = -16/15 across [0, 1]
    const double tau = 100.0;
    const double two_tau = 2.0 * tau;
    const double scale = 4.0 * two_tau * two_tau * two_tau * two_tau * two_tau;
    CHECK(gap_equation::F_YY(at(tau, 0.0), kParams, kQc) * scale ==
          doctest::Approx(16.0 / 15.0).epsilon(1e-5));
}

TEST_CASE("partials bundle matches the individual operations") {
    const ReducedPoint p = at(0.5 * kTauC, 0.4 * kDelta0 * kDelta0);
    const auto d = gap_equation::partials(p, kParams, kQc);
    CHECK(d.F == gap_equation::F_value(p, kParams, kQc));
    CHECK(d.F_T == gap_equation::F_T(p, kParams, kQc));
    CHECK(d.F_Y == gap_equation::F_Y(p, kParams, kQc));
    CHECK(d.F_TT == gap_equation::F_TT(p, kParams, kQc));
    CHECK(d.F_TY == gap_equation::F_TY(p, kParams, kQc));
    CHECK(d.F_YY == gap_equation::F_YY(p, kParams, kQc));
}
