// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>
#include <thread>

#include "bcsgap/gap_equation.hpp"
#include "bcsgap/output.hpp"
#include "bcsgap/solver.hpp"

using namespace bcsgap;
using gap_equation::MaterialParams;
using solver::GapPoint;
using solver::GapSolver;
using solver::GridSpacing;

namespace {

// frozen high-precision reduced constants
constexpr double kTauC01 = 5.147743300599928444695e-5;
constexpr double kTauC03 = 0.0404495251908900797938;
constexpr double kTauC05 = 0.1535134707185603384698;
constexpr double kDelta003 = 0.07143890225624670546324;
constexpr double kYHalfTc03 = 0.004674089332531656321026; // y at tau = 0.5 tau_c
constexpr double kYPrimeTc03 = -0.38102215824271777216;
constexpr double kYSecondTc01 = -15.369995625539225554;
constexpr double kYSecondTc03 = -15.475755612957752777;
constexpr double kYSecondTc05 = -16.818586105923961738;

MaterialParams reduced(double coupling) { return MaterialParams{coupling, 1.0, 1.0}; }

} // namespace

TEST_CASE("delta0 closed form, identity point, and overflow guard") {
    CHECK(solver::delta0(reduced(1.0 / std::asinh(1.0))) == 1.0);
    CHECK(solver::delta0(reduced(0.3)) ==
          doctest::Approx(kDelta003).epsilon(1e-15));
    CHECK(solver::delta0(MaterialParams{0.3, 2.0, 1.0}) ==
          doctest::Approx(2.0 * kDelta003).epsilon(1e-15));

    // monotone increasing in the coupling
    CHECK(solver::delta0(reduced(0.31)) > solver::delta0(reduced(0.3)));

    // past 1/lambda = 700, sinh overflows; the tail takes over smoothly
    const double lo = solver::delta0(reduced(1.0 / 699.9));
    const double hi = solver::delta0(reduced(1.0 / 700.1));
    CHECK(lo > 0.0);
    CHECK(hi > 0.0);
    CHECK(std::abs(lo / hi - std::exp(700.1 - 699.9)) < 1e-9);
    CHECK(solver::delta0(reduced(1.0 / 710.0)) > 0.0);
    CHECK(solver::delta0(reduced(0.001)) == 0.0); // exp(-1000) underflows; limit is 0
}

TEST_CASE("transition temperature matches the frozen definition-integral roots") {
    CHECK(GapSolver(reduced(0.1)).reduced_tau_c() ==
          doctest::Approx(kTauC01).epsilon(1e-9));
    CHECK(GapSolver(reduced(0.3)).reduced_tau_c() ==
          doctest::Approx(kTauC03).epsilon(1e-9));
    CHECK(GapSolver(reduced(0.5)).reduced_tau_c() ==
          doctest::Approx(kTauC05).epsilon(1e-9));
}

TEST_CASE("weak-coupling gap-to-T_c ratio against the oracle chain") {
    // delta0/tau_c = Delta0/(k_B T_c); frozen from the definition-integral
    // root and the closed-form gap at lambda = 0.1
    const GapSolver s(reduced(0.1));
    CHECK(s.reduced_delta0() / s.reduced_tau_c() ==
          doctest::Approx(1.763876992497667143315).epsilon(1e-9));
}

TEST_CASE("T_c is consistent with F(tau_c, 0) = 0") {
    const GapSolver s(reduced(0.3));
    const auto p = gap_equation::classify_point(s.reduced_tau_c(), 0.0, s.reduced_tau_c(),
                                                s.reduced_delta0());
    CHECK(std::abs(gap_equation::F_value(p, s.params(), s.quadrature_config())) <= 1e-9);
}

TEST_CASE("tiny coupling reports NoBracket instead of nonsense") {
    CHECK_THROWS_AS(GapSolver(reduced(0.00125)), NoBracket);
}

TEST_CASE("solve_gap endpoints are exact and interior matches the oracle") {
    const GapSolver s(reduced(0.3));
    const double d0 = s.delta0();

    const GapPoint zero = s.solve_gap(0.0);
    CHECK(zero.f == d0 * d0);
    CHECK(zero.delta == d0);
    CHECK(std::isnan(zero.f_prime));

    const GapPoint tc = s.solve_gap(s.transition_temperature());
    CHECK(tc.f == 0.0);
    CHECK(tc.delta == 0.0);

    // dense-scan/bisection oracle value at T = 0.5 T_c
    const GapPoint half = s.solve_gap(0.5 * s.transition_temperature());
    CHECK(half.f == doctest::Approx(kYHalfTc03).epsilon(1e-8));
    CHECK(half.residual <= s.solver_config().residual_tol);
    CHECK(half.f > 0.0);
    CHECK(half.f < d0 * d0);
}

TEST_CASE("solve_gap rejects out-of-domain temperatures") {
    const GapSolver s(reduced(0.3));
    CHECK_THROWS_AS(s.solve_gap(-1e-3), DomainError);
    CHECK_THROWS_AS(s.solve_gap(1.01 * s.transition_temperature()), DomainError);
    CHECK_THROWS_AS(s.solve_gap(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("f_prime endpoints and interior consistency") {
    const GapSolver s(reduced(0.3), solver::SolverConfig{1e-12, 1e-15, 200, 1e-3},
                      quadrature::QuadratureConfig{1e-14, 1e-13, 60});
    const double T_c = s.transition_temperature();

    CHECK(s.f_prime(0.0, s.solve_gap(0.0)) == 0.0);
    CHECK(s.fprime_at_tc() == doctest::Approx(kYPrimeTc03).epsilon(1e-10));
    CHECK(s.fprime_at_tc() < 0.0);
    CHECK(s.f_prime(T_c, s.solve_gap(T_c)) == s.fprime_at_tc());

    // central difference of the solved curve at 0.7 T_c
    const double T = 0.7 * T_c;
    const double h = 2e-3 * T_c;
    const double fd = (s.solve_gap(T + h).f - s.solve_gap(T - h).f) / (2.0 * h);
    const double analytic = s.f_prime(T, s.solve_gap(T));
    CHECK(std::abs(fd - analytic) <= 1e-6 * std::abs(analytic));
    CHECK(analytic < 0.0);
}

TEST_CASE("f_second endpoints against the frozen three-term forms") {
    CHECK(GapSolver(reduced(0.1)).fsecond_at_tc() ==
          doctest::Approx(kYSecondTc01).epsilon(1e-10));
    CHECK(GapSolver(reduced(0.3)).fsecond_at_tc() ==
          doctest::Approx(kYSecondTc03).epsilon(1e-10));
    CHECK(GapSolver(reduced(0.5)).fsecond_at_tc() ==
          doctest::Approx(kYSecondTc05).epsilon(1e-10));

    const GapSolver s(reduced(0.3));
    CHECK(s.f_second(0.0, s.solve_gap(0.0)) == 0.0);
}

TEST_CASE("f_second interior matches a second difference of the curve") {
    const GapSolver s(reduced(0.3), solver::SolverConfig{1e-12, 1e-15, 200, 1e-3},
                      quadrature::QuadratureConfig{1e-14, 1e-13, 60});
    const double T_c = s.transition_temperature();
    const double T = 0.7 * T_c;
    const double h = 2e-2 * T_c;
    const double fd2 =
        (s.solve_gap(T - h).f - 2.0 * s.solve_gap(T).f + s.solve_gap(T + h).f) / (h * h);
    const double analytic = s.f_second(T, s.solve_gap(T));
    CHECK(std::abs(fd2 - analytic) <= 1e-4 * std::abs(analytic));
}

TEST_CASE("delta_and_derivative: endpoints and the divergence flag") {
    const GapSolver s(reduced(0.3));
    const double T_c = s.transition_temperature();

    const auto at_zero = s.delta_and_derivative(s.solve_point(0.0));
    CHECK(at_zero.delta == s.delta0());
    CHECK(at_zero.delta_prime == 0.0);
    CHECK(!at_zero.divergent);

    const auto at_tc = s.delta_and_derivative(s.solve_point(T_c));
    CHECK(at_tc.delta == 0.0);
    CHECK(at_tc.divergent);
    CHECK(at_tc.delta_prime == -std::numeric_limits<double>::infinity());

    // |Delta'| sqrt(T_c - T) approaches sqrt(-f'(T_c))/2
    const double T = T_c * (1.0 - std::ldexp(1.0, -10));
    const auto near = s.delta_and_derivative(s.solve_point(T));
    const double v = std::abs(near.delta_prime) * std::sqrt(T_c - T);
    CHECK(v == doctest::Approx(0.5 * std::sqrt(-s.fprime_at_tc())).epsilon(0.01));

    CHECK_THROWS_AS(s.delta_and_derivative(s.solve_gap(0.4 * T_c)), DomainError);
}

TEST_CASE("asymptote of f near the transition") {
    const GapSolver s(reduced(0.3));
    const double T_c = s.transition_temperature();
    CHECK(s.asymptote(T_c) == 0.0);
    CHECK(s.asymptote(0.9 * T_c) > 0.0);

    double prev_dev = 1e30;
    for (int k = 4; k <= 8; ++k) {
        const double T = T_c * (1.0 - std::ldexp(1.0, -k));
        const double dev = std::abs(s.solve_gap(T).f / s.asymptote(T) - 1.0);
        CHECK(dev < prev_dev);
        prev_dev = dev;
    }
    CHECK(prev_dev < 0.02);
}

TEST_CASE("make_grid endpoints and shapes") {
    const GapSolver s(reduced(0.5));
    const double T_c = s.transition_temperature();

    for (auto spacing : {GridSpacing::Chebyshev, GridSpacing::Uniform}) {
        const auto grid = s.make_grid(9, spacing);
        CHECK(grid.size() == 9);
        CHECK(grid.front() == 0.0);
        CHECK(grid.back() == T_c);
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
            CHECK(grid[i] < grid[i + 1]);
    }
    CHECK(s.make_grid(2, GridSpacing::Chebyshev).size() == 2);
    CHECK_THROWS_AS(s.make_grid(1, GridSpacing::Uniform), DomainError);

    // chebyshev nodes cluster toward T_c
    const auto cheb = s.make_grid(16, GridSpacing::Chebyshev);
    CHECK(cheb[14] > 0.99 * T_c);
}

TEST_CASE("three-point sweep: exact endpoints, strict decrease") {
    const GapSolver s(reduced(0.3));
    const double T_c = s.transition_temperature();
    const std::vector<double> temps{0.0, 0.5 * T_c, T_c};
    const auto sweep = s.sweep(temps);

    REQUIRE(sweep.points.size() == 3);
    CHECK(sweep.points[0].f == s.delta0() * s.delta0());
    CHECK(sweep.points[2].f == 0.0);
    CHECK(sweep.points[0].f > sweep.points[1].f);
    CHECK(sweep.points[1].f > sweep.points[2].f);
    CHECK(sweep.T_c == T_c);
    CHECK(sweep.Delta0 == s.delta0());
    // every point carries both derivatives
    for (const auto& p : sweep.points) {
        CHECK(!std::isnan(p.f_prime));
        CHECK(!std::isnan(p.f_second));
    }
}

TEST_CASE("sweep validates its grid and aggregates per-point failures") {
    const GapSolver s(reduced(0.3));
    const double T_c = s.transition_temperature();
    CHECK_THROWS_AS(s.sweep(std::vector<double>{0.5 * T_c, 0.5 * T_c}), DomainError);

    try {
        s.sweep(std::vector<double>{0.0, 0.5 * T_c, 2.0 * T_c});
        FAIL("expected SweepError");
    } catch (const SweepError& e) {
        REQUIRE(e.failed_indices.size() == 1);
        CHECK(e.failed_indices[0] == 2);
    }
}

TEST_CASE("sweeps are deterministic") {
    const GapSolver s(reduced(0.3));
    const auto a = s.sweep(12, GridSpacing::Chebyshev);
    const auto b = s.sweep(12, GridSpacing::Chebyshev);
    CHECK(output::sweep_csv(a) == output::sweep_csv(b));
}

TEST_CASE("scale covariance: doubling the Debye energy doubles T_c and Delta0") {
    const double kb = 0.08617333262;
    const GapSolver base(MaterialParams{0.3, 1.0, kb});
    const GapSolver doubled(MaterialParams{0.3, 2.0, kb});
    CHECK(doubled.transition_temperature() / base.transition_temperature() ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(doubled.delta0() / base.delta0() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(doubled.reduced_tau_c() == base.reduced_tau_c());
    CHECK(doubled.reduced_delta0() == base.reduced_delta0());
}

TEST_CASE("concurrent solves on one instance match the serial results") {
    const GapSolver s(reduced(0.3));
    const double T_c = s.transition_temperature();
    const std::vector<double> temps{0.3 * T_c, 0.5 * T_c, 0.7 * T_c, 0.9 * T_c};

    std::vector<GapPoint> serial;
    for (double T : temps)
        serial.push_back(s.solve_point(T));

    std::vector<GapPoint> parallel(temps.size());
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < temps.size(); ++i)
        workers.emplace_back([&, i] { parallel[i] = s.solve_point(temps[i]); });
    for (auto& w : workers)
        w.join();

    for (std::size_t i = 0; i < temps.size(); ++i) {
        CHECK(parallel[i].f == serial[i].f);
        CHECK(parallel[i].f_prime == serial[i].f_prime);
        CHECK(parallel[i].f_second == serial[i].f_second);
    }
}

TEST_CASE("physical units flow through GapPoint construction") {
    const double kb = 0.08617333262; // meV/K
    const GapSolver s(MaterialParams{0.3, 10.0, kb});
    const double T_c = s.transition_temperature();
    CHECK(T_c == doctest::Approx(10.0 * kTauC03 / kb).epsilon(1e-9));

    const GapPoint p = s.solve_gap(0.5 * T_c);
    CHECK(p.f == doctest::Approx(100.0 * kYHalfTc03).epsilon(1e-8)); // energy^2
    CHECK(p.delta == std::sqrt(p.f));
    CHECK(p.tau == doctest::Approx(0.5 * kTauC03).epsilon(1e-9));

    // f' in energy^2 per temperature: k_B E_D y'
    const double fp = s.f_prime(T_c, s.solve_gap(T_c));
    CHECK(fp == doctest::Approx(kb * 10.0 * kYPrimeTc03).epsilon(1e-9));
}
