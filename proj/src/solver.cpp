// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bcsgap/kernels.hpp"

namespace bcsgap::solver {

using gap_equation::ReducedPoint;
using kernels::Eta;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Relative half-width of the endpoint-dispatch band around T = 0 and T = T_c.
constexpr double kEndpointSnap = 1e-12;

// Definition integral switches to Phi(40) + log(x/40) beyond this point;
// 1 - tanh(u) < 2e-35 for u >= 40, so the tail is a pure logarithm there.
constexpr double kTanhSaturation = 40.0;

// Doubling search cap for the transition-temperature bracket.
constexpr double kMaxBracket = 1e300;

struct RootResult {
    double x;
    double fx;
    int iterations;
};

// Safeguarded bracketing solve (Illinois-damped false position with
// bisection fallback). Requires fa and fb of opposite sign. Stops when
// |f| <= residual_tol or the bracket is narrower than xtol.
template <class Fn>
RootResult bracket_root(Fn&& f, double a, double fa, double b, double fb, double residual_tol,
                        double xtol, int max_iterations) {
    double best_x = std::abs(fa) < std::abs(fb) ? a : b;
    double best_f = std::abs(fa) < std::abs(fb) ? fa : fb;
    int last_side = 0;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        const double width = std::abs(b - a);
        if (width <= xtol || std::abs(best_f) <= residual_tol)
            return RootResult{best_x, best_f, iter - 1};

        double x = (fb * a - fa * b) / (fb - fa);
        if (!(x > std::min(a, b)) || !(x < std::max(a, b)) || last_side == 0)
            x = 0.5 * (a + b); // degenerate secant step, or first pass: bisect

        const double fx = f(x);
        if (std::abs(fx) < std::abs(best_f)) {
            best_x = x;
            best_f = fx;
        }
        if (std::abs(fx) <= residual_tol)
            return RootResult{x, fx, iter};

        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
            if (last_side == -1)
                fb *= 0.5; // Illinois: stop the b endpoint from sticking
            last_side = -1;
        } else {
            b = x;
            fb = fx;
            if (last_side == +1)
                fa *= 0.5;
            last_side = +1;
        }
    }
    throw BracketFailure("bracket_root: iteration limit reached with bracket [" +
                         std::to_string(std::min(a, b)) + ", " + std::to_string(std::max(a, b)) +
                         "]");
}

double sech2(double eta) {
    const double s = 1.0 / std::cosh(eta);
    return s * s;
}

} // namespace

double delta0(const MaterialParams& params) {
    params.validate();
    const double inv_lambda = 1.0 / params.coupling;
    if (inv_lambda > 700.0)
        return 2.0 * params.debye_energy * std::exp(-inv_lambda);
    return params.debye_energy / std::sinh(inv_lambda);
}

GapSolver::GapSolver(MaterialParams params, SolverConfig solver_cfg, QuadratureConfig quad_cfg)
    : params_(params), solver_cfg_(solver_cfg), quad_cfg_(quad_cfg) {
    params_.validate();
    solver_cfg_.validate();
    quad_cfg_.validate();
    delta0_reduced_ = solver::delta0(MaterialParams{params_.coupling, 1.0, 1.0});
    solve_transition_temperature();
    compute_endpoint_derivatives();
}

// Phi(x) = integral_0^x tanh(u)/u du, evaluated as x * integral_0^1
// tanh_over_eta(x eps) deps below the tanh saturation point and continued
// logarithmically above it. Strictly increasing in x.
double GapSolver::definition_integral(double x) const {
    if (x <= 0.0)
        return 0.0;
    if (x > kTanhSaturation)
        return definition_integral(kTanhSaturation) + std::log(x / kTanhSaturation);
    const auto result = quadrature::integrate(
        [x](double eps) { return kernels::tanh_over_eta(Eta(x * eps)); }, quad_cfg_);
    return x * result.value;
}

void GapSolver::solve_transition_temperature() {
    const double target = 1.0 / params_.coupling;

    double lo = 0.0;
    double f_lo = -target;
    double hi = 1.0;
    double f_hi = definition_integral(hi) - target;
    while (f_hi < 0.0) {
        if (hi >= kMaxBracket)
            throw NoBracket("transition_temperature: coupling " +
                            std::to_string(params_.coupling) +
                            " puts the Definition-1 root beyond the overflow-safe range");
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = definition_integral(hi) - target;
    }

    // A quarter of the residual tolerance here leaves room for the
    // quadrature-path difference when F(tau_c, 0) is evaluated later.
    const auto root = bracket_root([&](double x) { return definition_integral(x) - target; },
                                   lo, f_lo, hi, f_hi, 0.25 * solver_cfg_.residual_tol,
                                   8.0 * std::numeric_limits<double>::epsilon() * hi,
                                   solver_cfg_.max_iterations);
    tau_c_ = 1.0 / (2.0 * root.x);
}

void GapSolver::compute_endpoint_derivatives() {
    // Endpoint closed forms in reduced units: all integrals are over
    // eps in [0, 1] with eta0 = eps/(2 tau_c).
    const double tau_c = tau_c_;
    const std::vector<double> bp = gap_equation::layer_breakpoints(tau_c, 0.0);
    const auto J = [&](auto&& integrand) {
        return quadrature::integrate(integrand, quad_cfg_, bp).value;
    };
    const double j_sech2 = J([=](double eps) { return sech2(eps / (2.0 * tau_c)); });
    const double j_g = J([=](double eps) { return kernels::fn_g(Eta(eps / (2.0 * tau_c))); });
    const double j_core = J([=](double eps) {
        const double eta = eps / (2.0 * tau_c);
        return (eta * std::tanh(eta) - 1.0) * sech2(eta);
    });
    const double j_mixed = J([=](double eps) {
        const double eta = eps / (2.0 * tau_c);
        return kernels::tanh_over_eta(Eta(eta)) * sech2(eta);
    });
    const double j_G = J([=](double eps) { return kernels::fn_G(Eta(eps / (2.0 * tau_c))); });

    const double yprime_tc = 8.0 * tau_c * j_sech2 / j_g;
    const double ysecond_tc = 16.0 * j_core / j_g -
                              32.0 * j_sech2 * j_mixed / (j_g * j_g) +
                              8.0 * j_sech2 * j_sech2 * j_G / (j_g * j_g * j_g);

    const double kb = params_.boltzmann;
    const double ed = params_.debye_energy;
    fprime_tc_ = kb * ed * yprime_tc;
    fsecond_tc_ = kb * kb * ysecond_tc;
}

gap_equation::ReducedPoint GapSolver::classify(double tau, double y) const {
    return gap_equation::classify_point(tau, y, tau_c_, delta0_reduced_);
}

GapPoint GapSolver::solve_gap(double T) const {
    if (!(T >= 0.0) || !std::isfinite(T))
        throw DomainError("solve_gap: temperature must be finite and >= 0");
    const double tau = tau_of(T);
    if (tau > tau_c_ * (1.0 + kEndpointSnap))
        throw DomainError("solve_gap: temperature above T_c");

    const double ed = params_.debye_energy;
    const double y0 = delta0_reduced_ * delta0_reduced_;

    const auto make_point = [&](double y, double residual) {
        const double f = y * ed * ed;
        return GapPoint{T, tau, f, std::sqrt(f), kNaN, kNaN, residual};
    };

    if (tau <= tau_c_ * kEndpointSnap) {
        // Exact zero-temperature endpoint: f(0) = Delta0^2.
        const double residual = std::abs(gap_equation::F_value(
            ReducedPoint{0.0, y0, gap_equation::Region::Boundary0}, params_, quad_cfg_));
        return make_point(y0, residual);
    }
    if (tau >= tau_c_ * (1.0 - kEndpointSnap)) {
        // Exact transition endpoint: f(T_c) = 0.
        const double residual = std::abs(gap_equation::F_value(
            ReducedPoint{tau_c_, 0.0, gap_equation::Region::BoundaryTc}, params_, quad_cfg_));
        return make_point(0.0, residual);
    }

    const auto F_of_y = [&](double y) {
        return gap_equation::F_value(ReducedPoint{tau, y, gap_equation::Region::W1}, params_,
                                     quad_cfg_);
    };

    // F is strictly decreasing in y, so [0, delta0^2] brackets the root
    // (f(T) < f(0) for T > 0).
    const double f_lo = F_of_y(0.0);
    if (f_lo <= 0.0) {
        if (std::abs(f_lo) <= solver_cfg_.residual_tol)
            return make_point(0.0, std::abs(f_lo));
        throw BracketFailure("solve_gap: F(tau, 0) <= 0 beyond tolerance at tau = " +
                             std::to_string(tau));
    }
    const double f_hi = F_of_y(y0);
    if (f_hi >= 0.0) {
        if (std::abs(f_hi) <= solver_cfg_.residual_tol)
            return make_point(y0, std::abs(f_hi));
        throw BracketFailure("solve_gap: F(tau, delta0^2) >= 0 beyond tolerance at tau = " +
                             std::to_string(tau));
    }

    const auto root = bracket_root(F_of_y, 0.0, f_lo, y0, f_hi, solver_cfg_.residual_tol,
                                   solver_cfg_.y_tol * y0, solver_cfg_.max_iterations);
    if (std::abs(root.fx) > solver_cfg_.residual_tol)
        throw BracketFailure("solve_gap: converged bracket left residual " +
                             std::to_string(root.fx));
    return make_point(root.x, std::abs(root.fx));
}

double GapSolver::f_prime(double T, const GapPoint& solved) const {
    const double tau = tau_of(T);
    if (tau <= tau_c_ * kEndpointSnap)
        return 0.0;
    if (tau >= tau_c_ * (1.0 - kEndpointSnap))
        return fprime_tc_;

    const double ed = params_.debye_energy;
    const ReducedPoint p = classify(tau, solved.f / (ed * ed));
    const double ft = gap_equation::F_T(p, params_, quad_cfg_);
    const double fy = gap_equation::F_Y(p, params_, quad_cfg_);
    if (std::abs(fy) < 10.0 * std::numeric_limits<double>::epsilon())
        throw DegenerateDerivative("f_prime: |F_Y| at rounding level");
    return params_.boltzmann * ed * (-ft / fy);
}

double GapSolver::f_second(double T, const GapPoint& solved) const {
    const double tau = tau_of(T);
    if (tau <= tau_c_ * kEndpointSnap)
        return 0.0;
    if (tau >= tau_c_ * (1.0 - kEndpointSnap))
        return fsecond_tc_;

    const double ed = params_.debye_energy;
    const ReducedPoint p = classify(tau, solved.f / (ed * ed));
    const auto d = gap_equation::partials(p, params_, quad_cfg_);
    if (std::abs(d.F_Y) < 10.0 * std::numeric_limits<double>::epsilon())
        throw DegenerateDerivative("f_second: |F_Y| at rounding level");
    const double fy2 = d.F_Y * d.F_Y;
    const double ysecond =
        (-d.F_TT * fy2 + 2.0 * d.F_TY * d.F_T * d.F_Y - d.F_YY * d.F_T * d.F_T) /
        (fy2 * d.F_Y);
    return params_.boltzmann * params_.boltzmann * ysecond;
}

double GapSolver::asymptote(double T) const {
    return -fprime_tc_ * (transition_temperature() - T);
}

double GapSolver::asymptote_near_tc(double T, const SweepResult& constants) {
    return -constants.fprime_Tc * (constants.T_c - T);
}

DeltaDerivative GapSolver::delta_and_derivative(const GapPoint& point) const {
    if (point.tau >= tau_c_ * (1.0 - kEndpointSnap))
        return DeltaDerivative{0.0, -std::numeric_limits<double>::infinity(), true};
    if (point.tau <= tau_c_ * kEndpointSnap)
        return DeltaDerivative{point.delta, 0.0, false};
    if (std::isnan(point.f_prime))
        throw DomainError("delta_and_derivative: point has no derivatives filled");
    return DeltaDerivative{point.delta, point.f_prime / (2.0 * point.delta), false};
}

std::vector<double> GapSolver::make_grid(int points, GridSpacing spacing) const {
    if (points < 2)
        throw DomainError("make_grid: need at least the two endpoints");
    const double T_c = transition_temperature();
    std::vector<double> grid(static_cast<std::size_t>(points));
    grid.front() = 0.0;
    grid.back() = T_c;
    if (spacing == GridSpacing::Uniform) {
        for (int i = 1; i + 1 < points; ++i)
            grid[static_cast<std::size_t>(i)] = T_c * i / (points - 1);
        return grid;
    }
    // Chebyshev-like: interior nodes T_lo + (T_c - T_lo) sin(pi k / (2 m))
    // cluster toward T_c; T_lo = T_c/8 keeps every consecutive pair of
    // f-values resolvable in double precision (the curve is exponentially
    // flat below that).
    constexpr double pi = 3.141592653589793238462643383279502884;
    const double T_lo = T_c / 8.0;
    const int m = points - 2;
    for (int i = 1; i + 1 < points; ++i) {
        const double s = std::sin(0.5 * pi * (i - 1) / m);
        grid[static_cast<std::size_t>(i)] = T_lo + (T_c - T_lo) * s;
    }
    return grid;
}

SweepResult GapSolver::sweep(std::span<const double> temperatures) const {
    for (std::size_t i = 0; i + 1 < temperatures.size(); ++i)
        if (!(temperatures[i] < temperatures[i + 1]))
            throw DomainError("sweep: temperatures must be strictly increasing");

    SweepResult result{params_, transition_temperature(), delta0(), fprime_tc_, fsecond_tc_, {}};
    result.points.reserve(temperatures.size());

    std::vector<std::size_t> failed;
    std::string first_error;
    for (std::size_t i = 0; i < temperatures.size(); ++i) {
        try {
            result.points.push_back(solve_point(temperatures[i]));
        } catch (const std::exception& e) {
            failed.push_back(i);
            if (first_error.empty())
                first_error = e.what();
        }
    }
    if (!failed.empty())
        throw SweepError("sweep: " + std::to_string(failed.size()) +
                             " point(s) failed; first: " + first_error,
                         std::move(failed));
    return result;
}

SweepResult GapSolver::sweep(int points, GridSpacing spacing) const {
    const std::vector<double> grid = make_grid(points, spacing);
    return sweep(std::span<const double>(grid));
}

GapPoint GapSolver::solve_point(double T) const {
    GapPoint point = solve_gap(T);
    point.f_prime = f_prime(T, point);
    point.f_second = f_second(T, point);
    return point;
}

} // namespace bcsgap::solver
