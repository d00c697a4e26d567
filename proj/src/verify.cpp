// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include "bcsgap/gap_equation.hpp"
#include "bcsgap/kernels.hpp"
#include "bcsgap/output.hpp"
#include "bcsgap/quadrature.hpp"
#include "bcsgap/solver.hpp"

namespace bcsgap::verify {

using gap_equation::MaterialParams;
using gap_equation::ReducedPoint;
using kernels::Eta;
using quadrature::QuadratureConfig;
using solver::GapPoint;
using solver::GapSolver;
using solver::SolverConfig;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tight configurations for the finite-difference and oracle comparisons;
// they push the solver noise floor well below every stated tolerance.
SolverConfig tight_solver() { return SolverConfig{1e-12, 1e-15, 200, 1e-3}; }
QuadratureConfig tight_quadrature() { return QuadratureConfig{1e-14, 1e-13, 60}; }

void add(std::vector<CheckResult>& out, std::string name, std::string context, bool passed,
         double measured, double threshold) {
    out.push_back(CheckResult{std::move(name), std::move(context), passed, measured, threshold});
}

// ---------------------------------------------------------------------------
// Independent oracle machinery (trapezoid/Romberg + plain bisection); shares
// nothing with the production Gauss-Kronrod integrator or Illinois solver.
// ---------------------------------------------------------------------------

double romberg(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr int kMaxLevels = 22;
    double table[kMaxLevels][kMaxLevels];
    double h = b - a;
    table[0][0] = 0.5 * h * (f(a) + f(b));
    long points = 1;
    for (int k = 1; k < kMaxLevels; ++k) {
        h *= 0.5;
        double sum = 0.0;
        for (long i = 0; i < points; ++i)
            sum += f(a + h * (2 * i + 1));
        points *= 2;
        table[k][0] = 0.5 * table[k - 1][0] + h * sum;
        double factor = 1.0;
        for (int j = 1; j <= k; ++j) {
            factor *= 4.0;
            table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
        }
        if (k > 3 && std::abs(table[k][k] - table[k - 1][k - 1]) <
                         tol * std::max(1.0, std::abs(table[k][k])))
            return table[k][k];
    }
    return table[kMaxLevels - 1][kMaxLevels - 1];
}

// Definition integral of the transition temperature, oracle route:
// Romberg over [0, min(x, 40)] plus the exact logarithmic tail where
// tanh(u) = 1 to beyond double precision.
double oracle_definition_integral(double x, double tol) {
    const auto integrand = [](double u) { return u == 0.0 ? 1.0 : std::tanh(u) / u; };
    if (x <= 40.0)
        return romberg(integrand, 0.0, x, tol);
    return romberg(integrand, 0.0, 40.0, tol) + std::log(x / 40.0);
}

double oracle_tau_c(double coupling) {
    const double target = 1.0 / coupling;
    double lo = 1e-8, hi = 1.0;
    while (oracle_definition_integral(hi, 1e-13) < target)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (oracle_definition_integral(mid, 1e-13) < target)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) < 1e-13 * hi)
            break;
    }
    return 1.0 / (lo + hi);
}

// Reduced gap functional for the brute-force oracle, with raw std calls.
double oracle_F(double tau, double y, double inv_lambda, double tol) {
    const auto integrand = [=](double eps) {
        const double s = std::sqrt(eps * eps + y);
        if (s == 0.0)
            return 1.0 / (2.0 * tau);
        return std::tanh(s / (2.0 * tau)) / s;
    };
    return romberg(integrand, 0.0, 1.0, tol) - inv_lambda;
}

// Extended-precision direct evaluations of the closed-form kernels.
long double direct_g_ld(long double e) {
    const long double sech = 1.0L / std::cosh(e);
    return (sech * sech - std::tanh(e) / e) / (e * e);
}

long double direct_G_ld(long double e) {
    return (3.0L * direct_g_ld(e) + 2.0L * (std::tanh(e) / e) / (std::cosh(e) * std::cosh(e))) /
           (e * e);
}

double sech2(double x) {
    const double s = 1.0 / std::cosh(x);
    return s * s;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid(static_cast<std::size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return grid;
}

// ---------------------------------------------------------------------------

void kernel_exactness(std::vector<CheckResult>& out) {
    const int g0_ok = kernels::fn_g(Eta(0.0)) == -2.0 / 3.0;
    const int G0_ok = kernels::fn_G(Eta(0.0)) == -16.0 / 15.0;
    add(out, "01 g(0) = -2/3 bit-exact", "", g0_ok, g0_ok ? 0 : 1, 0);
    add(out, "01 G(0) = -16/15 bit-exact", "", G0_ok, G0_ok ? 0 : 1, 0);

    double max_g = -kInf;
    for (double e : log_grid(1e-6, 1e2, 200))
        max_g = std::max(max_g, kernels::fn_g(Eta(e)));
    add(out, "01 g < 0 on 200-point log grid [1e-6, 1e2]", "", max_g < 0.0, max_g, 0.0);
}

void kernel_calculus(std::vector<CheckResult>& out) {
    // |fd(g)(eta) + eta G(eta)| <= 1e-6 max(1, |eta G|) over [0.1, 20].
    double worst = 0.0;
    for (double e : log_grid(0.1, 20.0, 80)) {
        const double h = 1e-5 * std::max(1.0, e);
        const double fd = (kernels::fn_g(Eta(e + h)) - kernels::fn_g(Eta(e - h))) / (2.0 * h);
        const double target = -e * kernels::fn_G(Eta(e));
        const double scale = std::max(1.0, std::abs(target));
        worst = std::max(worst, std::abs(fd - target) / scale);
    }
    add(out, "02 g' = -eta G by central differences on [0.1, 20]", "", worst <= 1e-6, worst,
        1e-6);
}

void kernel_series_agreement(std::vector<CheckResult>& out) {
    // Implementation vs extended-precision direct formulas across each
    // function's series/direct switch (0.125 for g, 0.25 for G).
    double worst_g = 0.0, worst_G = 0.0;
    for (double e : log_grid(1.0 / 16.0, 0.16, 33)) {
        const long double gl = direct_g_ld(static_cast<long double>(e));
        worst_g = std::max(
            worst_g, static_cast<double>(std::abs((kernels::fn_g(Eta(e)) - gl) / gl)));
    }
    for (double e : log_grid(0.125, 0.32, 33)) {
        const long double Gl = direct_G_ld(static_cast<long double>(e));
        worst_G = std::max(
            worst_G, static_cast<double>(std::abs((kernels::fn_G(Eta(e)) - Gl) / Gl)));
    }
    add(out, "xx series/direct agreement of g across switch", "", worst_g <= 1e-12, worst_g,
        1e-12);
    add(out, "xx series/direct agreement of G across switch", "", worst_G <= 1e-12, worst_G,
        1e-12);
}

void kernel_flat_derivative_at_zero(std::vector<CheckResult>& out) {
    // g'(0) = 0 and G'(0) = 0: difference quotients shrink with h.
    double prev_g = kInf, prev_G = kInf;
    bool shrinking = true;
    double final_g = 0.0, final_G = 0.0;
    for (double h : {1e-4, 1e-6, 1e-8}) {
        final_g = std::abs(kernels::fn_g(Eta(h)) - (-2.0 / 3.0)) / h;
        final_G = std::abs(kernels::fn_G(Eta(h)) - (-16.0 / 15.0)) / h;
        shrinking = shrinking && final_g < prev_g && final_G < prev_G;
        prev_g = final_g;
        prev_G = final_G;
    }
    const bool ok = shrinking && final_g <= 1e-7 && final_G <= 1e-7;
    add(out, "xx g'(0) = G'(0) = 0 by shrinking difference quotients", "", ok,
        std::max(final_g, final_G), 1e-7);
}

void kernel_monotone_tanh(std::vector<CheckResult>& out) {
    // grid starts where the decrease eta^2/3 is representable in doubles
    double prev = kernels::tanh_over_eta(Eta(0.0));
    double worst = -kInf; // most positive increase; must stay <= 0
    for (double e : log_grid(1e-6, 1e2, 300)) {
        const double v = kernels::tanh_over_eta(Eta(e));
        worst = std::max(worst, v - prev);
        prev = v;
    }
    add(out, "xx tanh_over_eta monotone decreasing", "", worst <= 0.0, worst, 0.0);
}

void quadrature_honesty(std::vector<CheckResult>& out) {
    const QuadratureConfig qc; // defaults
    {
        const auto r = quadrature::integrate([](double) { return 1.0; }, qc);
        const double err = std::abs(r.value - 1.0);
        const bool ok = err <= r.error_estimate && r.error_estimate <= 1e-10;
        add(out, "03 quadrature honest on constant integrand", "", ok,
            std::max(err, r.error_estimate), 1e-10);
    }
    {
        const double tau = 0.25;
        const auto r =
            quadrature::integrate([tau](double eps) { return sech2(eps / (2.0 * tau)); }, qc);
        const double exact = 2.0 * tau * std::tanh(1.0 / (2.0 * tau));
        const double err = std::abs(r.value - exact);
        const bool ok = err <= r.error_estimate && r.error_estimate <= 1e-10;
        add(out, "03 quadrature honest on sech^2 closed form", "", ok,
            std::max(err, r.error_estimate), 1e-10);
    }
    {
        // 1/(eps^2 + y)^{3/2} against its antiderivative eps/(y sqrt(eps^2+y)).
        const double y = 0.04;
        const auto r = quadrature::integrate(
            [y](double eps) { return 1.0 / std::pow(eps * eps + y, 1.5); }, qc);
        const double exact = 1.0 / (y * std::sqrt(1.0 + y));
        const double err = std::abs(r.value - exact);
        const bool ok = err <= r.error_estimate;
        add(out, "xx quadrature honest on inverse-power integrand", "", ok, err,
            r.error_estimate);
    }
}

void quadrature_linearity(std::vector<CheckResult>& out) {
    const QuadratureConfig qc;
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    double worst = 0.0;
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
        const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
        const auto phi1 = [=](double x) { return c0 + c1 * std::sin(3.0 * x); };
        const auto phi2 = [=](double x) { return c2 * std::exp(-x) + c3 * x * x; };
        const double a = coef(rng), b = coef(rng);
        const auto r1 = quadrature::integrate(phi1, qc);
        const auto r2 = quadrature::integrate(phi2, qc);
        const auto r12 =
            quadrature::integrate([&](double x) { return a * phi1(x) + b * phi2(x); }, qc);
        const double defect = std::abs(r12.value - a * r1.value - b * r2.value);
        // roundoff floor: the estimates cannot see the final summation noise
        const double floor = 4.0 * 2.220446049250313e-16 *
                             (std::abs(a * r1.value) + std::abs(b * r2.value) +
                              std::abs(r12.value));
        const double budget = 2.0 * (std::abs(a) * r1.error_estimate +
                                     std::abs(b) * r2.error_estimate + r12.error_estimate) +
                              floor;
        worst = std::max(worst, defect - budget);
        ok = ok && defect <= budget;
    }
    add(out, "xx quadrature linearity within combined estimates", "", ok, worst, 0.0);
}

void quadrature_refinement(std::vector<CheckResult>& out) {
    // Halving rel_tol must not increase the true error on a closed form.
    const double tau = 0.25;
    const double exact = 2.0 * tau * std::tanh(1.0 / (2.0 * tau));
    const auto phi = [tau](double eps) { return sech2(eps / (2.0 * tau)); };
    double prev_err = kInf;
    bool ok = true;
    for (double rel : {1e-6, 1e-8, 1e-10}) {
        const QuadratureConfig qc{1e-14, rel, 60};
        const double err = std::abs(quadrature::integrate(phi, qc).value - exact);
        ok = ok && err <= prev_err + 1e-15;
        prev_err = err;
    }
    add(out, "xx quadrature refinement never raises true error", "", ok, prev_err, 1e-10);
}

void zero_edge_closed_form(std::vector<CheckResult>& out) {
    // F_Y(0, y0) closed form vs quadrature of -(1/2)(eps^2+y0)^{-3/2}.
    const double y0 = 0.25;
    const MaterialParams params{0.3, 1.0, 1.0};
    const ReducedPoint p{0.0, y0, gap_equation::Region::W2};
    const double closed = gap_equation::F_Y(p, params, QuadratureConfig{});
    const auto quad = quadrature::integrate(
        [y0](double eps) { return -0.5 / std::pow(eps * eps + y0, 1.5); }, QuadratureConfig{});
    const double diff = std::abs(closed - quad.value);
    add(out, "05 zero-temperature F_Y closed form vs quadrature", "", diff <= 1e-10, diff,
        1e-10);
}

void delta0_identity(std::vector<CheckResult>& out) {
    const double lambda = 1.0 / std::asinh(1.0);
    const double d0 = solver::delta0(MaterialParams{lambda, 1.0, 1.0});
    const int ok = d0 == 1.0;
    add(out, "04 delta0 = 1 exactly at coupling 1/asinh(1)", "", ok, ok ? 0 : 1, 0);
}

void kernel_h_route(std::vector<CheckResult>& out) {
    // Removable singularity: h -> 1/(2 tau) as eps^2 + y -> 0.
    const double tau = 0.2;
    const double v = kernels::kernel_h(tau, 0.0, 0.0);
    const double diff = std::abs(v - 1.0 / (2.0 * tau));
    bool threw = false;
    try {
        kernels::kernel_h(0.0, 0.0, 0.5);
    } catch (const DomainError&) {
        threw = true;
    }
    add(out, "xx kernel_h removable singularity and excluded corner", "",
        diff == 0.0 && threw, diff, 0.0);
}

// ---------------------------------------------------------------------------

std::string lam_ctx(double coupling) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "lambda=%g", coupling);
    return buf;
}

void root_consistency(std::vector<CheckResult>& out, const GapSolver& solver) {
    const auto& params = solver.params();
    const QuadratureConfig qc = solver.quadrature_config();
    const double tau_c = solver.reduced_tau_c();
    const double y0 = solver.reduced_delta0() * solver.reduced_delta0();
    const double f_tc = std::abs(gap_equation::F_value(
        ReducedPoint{tau_c, 0.0, gap_equation::Region::BoundaryTc}, params, qc));
    const double f_0 = std::abs(gap_equation::F_value(
        ReducedPoint{0.0, y0, gap_equation::Region::Boundary0}, params, qc));
    add(out, "04 F(tau_c, 0) = 0", lam_ctx(params.coupling), f_tc <= 1e-9, f_tc, 1e-9);
    add(out, "04 F(0, delta0^2) = 0", lam_ctx(params.coupling), f_0 <= 1e-9, f_0, 1e-9);
}

void sweep_monotonicity(std::vector<CheckResult>& out, const GapSolver& solver,
                        const solver::SweepResult& sweep) {
    const std::string ctx = lam_ctx(solver.params().coupling);
    const double d0 = solver.delta0();
    const bool endpoints_exact =
        sweep.points.front().f == d0 * d0 && sweep.points.back().f == 0.0;
    add(out, "06 sweep endpoints f(0) = Delta0^2, f(T_c) = 0 exact", ctx, endpoints_exact,
        endpoints_exact ? 0 : 1, 0);

    double min_drop = kInf;
    for (std::size_t i = 0; i + 1 < sweep.points.size(); ++i)
        min_drop = std::min(min_drop, sweep.points[i].f - sweep.points[i + 1].f);
    add(out, "06 sweep f strictly decreasing (64-point default grid)", ctx, min_drop > 0.0,
        min_drop, 0.0);

    bool t_increasing = true;
    for (std::size_t i = 0; i + 1 < sweep.points.size(); ++i)
        t_increasing = t_increasing && sweep.points[i].T < sweep.points[i + 1].T;
    add(out, "xx sweep T strictly increasing", ctx, t_increasing, t_increasing ? 0 : 1, 0);
}

void gap_equation_residual(std::vector<CheckResult>& out, const GapSolver& solver,
                           const solver::SweepResult& sweep) {
    // Substituting Delta(T)^2 back into the defining equation must give 1:
    // lambda * integral of h equals 1 exactly on the curve.
    const auto& params = solver.params();
    const QuadratureConfig qc = solver.quadrature_config();
    double worst = 0.0;
    for (const auto& p : sweep.points) {
        if (!(p.T > 0.0))
            continue;
        const double y = p.f / (params.debye_energy * params.debye_energy);
        const double integral =
            gap_equation::F_value(ReducedPoint{p.tau, y, gap_equation::Region::W1}, params, qc) +
            1.0 / params.coupling;
        worst = std::max(worst, std::abs(params.coupling * integral - 1.0));
    }
    add(out, "07 gap equation reproduces 1 on the sweep (T > 0)", lam_ctx(params.coupling),
        worst <= 1e-8, worst, 1e-8);
}

void implicit_derivative_agreement(std::vector<CheckResult>& out, const GapSolver& tight) {
    const std::string ctx = lam_ctx(tight.params().coupling);
    const double T_c = tight.transition_temperature();

    // 20 interior points; below ~0.4 T_c the curve is exponentially flat and
    // |f'| sinks under the double-precision difference floor, so the
    // relative comparison is made where the derivative is resolvable.
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double T = T_c * (0.45 + 0.48 * i / 19.0);
        const GapPoint at = tight.solve_gap(T);
        const double h1 = 4e-3 * T_c;
        const double d1 =
            (tight.solve_gap(T - 2 * h1).f - 8.0 * tight.solve_gap(T - h1).f +
             8.0 * tight.solve_gap(T + h1).f - tight.solve_gap(T + 2 * h1).f) /
            (12.0 * h1);
        const double analytic1 = tight.f_prime(T, at);
        worst1 = std::max(worst1, std::abs(d1 - analytic1) / std::abs(analytic1));

        const double h2 = 2e-2 * T_c;
        const double d2 =
            (-tight.solve_gap(T - 2 * h2).f + 16.0 * tight.solve_gap(T - h2).f - 30.0 * at.f +
             16.0 * tight.solve_gap(T + h2).f - tight.solve_gap(T + 2 * h2).f) /
            (12.0 * h2 * h2);
        const double analytic2 = tight.f_second(T, at);
        worst2 = std::max(worst2, std::abs(d2 - analytic2) / std::abs(analytic2));
    }
    add(out, "08 f' matches central differences at 20 interior points", ctx, worst1 <= 1e-6,
        worst1, 1e-6);
    add(out, "08 f'' matches second differences at 20 interior points", ctx, worst2 <= 1e-5,
        worst2, 1e-5);
}

void endpoint_formulas(std::vector<CheckResult>& out, const GapSolver& tight) {
    const std::string ctx = lam_ctx(tight.params().coupling);
    const double T_c = tight.transition_temperature();

    // Richardson limit of the interior formulas as T -> T_c: with values at
    // h, h/2, h/4 the combination (1/3, -2, 8/3) cancels the O(h) and
    // O(h^2) terms.
    const auto richardson = [&](auto&& eval) {
        const double h = T_c / 128.0;
        const double v1 = eval(T_c - h);
        const double v2 = eval(T_c - 0.5 * h);
        const double v3 = eval(T_c - 0.25 * h);
        return v1 / 3.0 - 2.0 * v2 + (8.0 / 3.0) * v3;
    };

    const double fp_limit = richardson([&](double T) {
        const GapPoint p = tight.solve_gap(T);
        return tight.f_prime(T, p);
    });
    const double fp_closed = tight.fprime_at_tc();
    const double rel1 = std::abs(fp_limit - fp_closed) / std::abs(fp_closed);
    add(out, "09 f'(T_c) closed form vs interior Richardson limit", ctx, rel1 <= 1e-6, rel1,
        1e-6);

    const double fs_limit = richardson([&](double T) {
        const GapPoint p = tight.solve_gap(T);
        return tight.f_second(T, p);
    });
    const double fs_closed = tight.fsecond_at_tc();
    const double rel2 = std::abs(fs_limit - fs_closed) / std::abs(fs_closed);
    add(out, "09 f''(T_c) three-term form vs interior Richardson limit", ctx, rel2 <= 1e-4,
        rel2, 1e-4);

    add(out, "09 f'(T_c) < 0", ctx, fp_closed < 0.0, fp_closed, 0.0);
}

void asymptote_checks(std::vector<CheckResult>& out, const GapSolver& tight) {
    const std::string ctx = lam_ctx(tight.params().coupling);
    const double T_c = tight.transition_temperature();
    double worst_band = 0.0;
    double prev_dev = kInf;
    bool monotone = true;
    for (int k = 4; k <= 12; ++k) {
        const double T = T_c * (1.0 - std::ldexp(1.0, -k));
        const double f = tight.solve_gap(T).f;
        const double ratio = f / tight.asymptote(T);
        const double dev = std::abs(ratio - 1.0);
        worst_band = std::max(worst_band, dev / (5.0 * std::ldexp(1.0, -k)));
        monotone = monotone && dev <= prev_dev;
        prev_dev = dev;
    }
    add(out, "10 asymptote ratio within 1 +/- 5*2^-k", ctx, worst_band <= 1.0, worst_band, 1.0);
    add(out, "10 asymptote deviation improves monotonically in k", ctx, monotone,
        monotone ? 0 : 1, 0);
}

void flatness_at_zero(std::vector<CheckResult>& out, const GapSolver& solver) {
    const std::string ctx = lam_ctx(solver.params().coupling);
    const double d0 = solver.delta0();
    const double f = solver.solve_gap(0.05 * solver.transition_temperature()).f;
    const double rel = std::abs(f - d0 * d0) / (d0 * d0);
    add(out, "11 |f(0.05 T_c) - Delta0^2|/Delta0^2 < 1e-8", ctx, rel < 1e-8, rel, 1e-8);

    const GapPoint zero = solver.solve_point(0.0);
    const bool exact_zero = zero.f_prime == 0.0 && zero.f_second == 0.0;
    add(out, "11 f'(0) = f''(0) = 0 by endpoint dispatch", ctx, exact_zero, exact_zero ? 0 : 1,
        0);
}

void delta_prime_divergence(std::vector<CheckResult>& out, const GapSolver& tight) {
    const std::string ctx = lam_ctx(tight.params().coupling);
    const double T_c = tight.transition_temperature();
    double vmin = kInf, vmax = -kInf;
    for (int k = 6; k <= 12; ++k) {
        const double T = T_c * (1.0 - std::ldexp(1.0, -k));
        const GapPoint p = tight.solve_point(T);
        const auto dd = tight.delta_and_derivative(p);
        const double v = std::abs(dd.delta_prime) * std::sqrt(T_c - T);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    }
    const double spread = vmax / vmin - 1.0;
    const bool ok = vmin > 0.0 && std::isfinite(vmax) && spread <= 0.5;
    add(out, "12 |Delta'| sqrt(T_c - T) bounded, bounded away from 0", ctx, ok, spread, 0.5);
}

void monotone_in_tau_and_y(std::vector<CheckResult>& out, const GapSolver& solver) {
    const auto& params = solver.params();
    const QuadratureConfig qc = solver.quadrature_config();
    const double tau_c = solver.reduced_tau_c();
    const double y0 = solver.reduced_delta0() * solver.reduced_delta0();
    bool ok = true;
    for (double ft : {0.3, 0.6, 0.9}) {
        for (double fy : {0.1, 0.5, 0.9}) {
            const double tau = ft * tau_c;
            const double y = fy * y0;
            const double base = gap_equation::F_value(
                ReducedPoint{tau, y, gap_equation::Region::W1}, params, qc);
            const double up_y = gap_equation::F_value(
                ReducedPoint{tau, y + 0.05 * y0, gap_equation::Region::W1}, params, qc);
            const double up_t = gap_equation::F_value(
                ReducedPoint{tau + 0.05 * tau_c, y, gap_equation::Region::W1}, params, qc);
            ok = ok && up_y < base && up_t < base;
        }
    }
    add(out, "xx F strictly decreasing in y and in tau", lam_ctx(params.coupling), ok,
        ok ? 0 : 1, 0);
}

void mixed_partial_symmetry(std::vector<CheckResult>& out, const GapSolver& tight) {
    // F_TY from its closed formula vs centered differences of F_T in y,
    // on a 5x5 interior grid.
    const auto& params = tight.params();
    const QuadratureConfig qc = tight_quadrature();
    const double tau_c = tight.reduced_tau_c();
    const double y0 = tight.reduced_delta0() * tight.reduced_delta0();
    double worst = 0.0;
    for (double ft : {0.3, 0.45, 0.6, 0.75, 0.9}) {
        for (double fy : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const double tau = ft * tau_c;
            const double y = fy * y0;
            const double k = 2e-4 * y0;
            const double ft_hi = gap_equation::F_T(
                ReducedPoint{tau, y + k, gap_equation::Region::W1}, params, qc);
            const double ft_lo = gap_equation::F_T(
                ReducedPoint{tau, y - k, gap_equation::Region::W1}, params, qc);
            const double fd = (ft_hi - ft_lo) / (2.0 * k);
            const double closed = gap_equation::F_TY(
                ReducedPoint{tau, y, gap_equation::Region::W1}, params, qc);
            worst = std::max(worst, std::abs(fd - closed) / std::abs(closed));
        }
    }
    add(out, "xx mixed partial F_TY matches dF_T/dy on 5x5 grid", lam_ctx(params.coupling),
        worst <= 1e-6, worst, 1e-6);
}

void edge_continuity(std::vector<CheckResult>& out, const GapSolver& solver) {
    // All five partials approach their (tau_c, 0) edge values along
    // (tau_c(1-h), y0 h): first-order continuity means the defect shrinks
    // by ~16x when h shrinks by 16x.
    const auto& params = solver.params();
    const QuadratureConfig qc = solver.quadrature_config();
    const double tau_c = solver.reduced_tau_c();
    const double y0 = solver.reduced_delta0() * solver.reduced_delta0();
    const ReducedPoint edge{tau_c, 0.0, gap_equation::Region::BoundaryTc};
    const auto edge_vals = gap_equation::partials(edge, params, qc);

    const auto defect = [&](double h) {
        const ReducedPoint p{tau_c * (1.0 - h), y0 * h, gap_equation::Region::W1};
        const auto v = gap_equation::partials(p, params, qc);
        double d = std::abs(v.F_T - edge_vals.F_T) / std::abs(edge_vals.F_T);
        d = std::max(d, std::abs(v.F_Y - edge_vals.F_Y) / std::abs(edge_vals.F_Y));
        d = std::max(d, std::abs(v.F_TT - edge_vals.F_TT) / std::abs(edge_vals.F_TT));
        d = std::max(d, std::abs(v.F_TY - edge_vals.F_TY) / std::abs(edge_vals.F_TY));
        d = std::max(d, std::abs(v.F_YY - edge_vals.F_YY) / std::abs(edge_vals.F_YY));
        return d;
    };
    const double d1 = defect(4e-3);
    const double d2 = defect(4e-3 / 16.0);
    const bool ok = d2 <= std::max(0.25 * d1, 1e-9);
    add(out, "xx partials continuous up to the (tau_c, 0) edge", lam_ctx(params.coupling), ok,
        d2, std::max(0.25 * d1, 1e-9));
}

void tc_oracle(std::vector<CheckResult>& out, const GapSolver& solver) {
    const double mine = solver.reduced_tau_c();
    const double oracle = oracle_tau_c(solver.params().coupling);
    const double rel = std::abs(mine - oracle) / oracle;
    add(out, "xx tau_c matches Romberg/bisection oracle", lam_ctx(solver.params().coupling),
        rel <= 1e-9, rel, 1e-9);
}

// ---------------------------------------------------------------------------

void brute_force_gap_oracle(std::vector<CheckResult>& out) {
    // lambda = 0.3, T = 0.5 T_c: dense y-scan at 1e-6 step, then plain
    // bisection with the Romberg functional; compare against the
    // production bracketing solve.
    const double coupling = 0.3;
    const GapSolver tight(MaterialParams{coupling, 1.0, 1.0}, tight_solver(),
                          tight_quadrature());
    const double tau = 0.5 * tight.reduced_tau_c();
    const double inv_lambda = 1.0 / coupling;
    const double y0 = tight.reduced_delta0() * tight.reduced_delta0();

    const double step = 1e-6;
    const long cells = static_cast<long>(std::ceil(y0 / step));
    int sign_changes = 0;
    double bracket_lo = 0.0;
    double prev = oracle_F(tau, 0.0, inv_lambda, 1e-7);
    for (long i = 1; i <= cells; ++i) {
        const double y = std::min(i * step, y0);
        const double cur = oracle_F(tau, y, inv_lambda, 1e-7);
        if ((prev > 0.0) != (cur > 0.0)) {
            ++sign_changes;
            bracket_lo = (i - 1) * step;
        }
        prev = cur;
    }
    add(out, "13 dense scan sees a single sign change of F in y", "lambda=0.3",
        sign_changes == 1, sign_changes, 1);

    double lo = bracket_lo, hi = bracket_lo + step;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (oracle_F(tau, mid, inv_lambda, 1e-12) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double y_oracle = 0.5 * (lo + hi);
    const double y_solver = tight.solve_gap(0.5 * tight.transition_temperature()).f;
    const double diff = std::abs(y_solver - y_oracle);
    add(out, "13 bracketing solve matches brute-force oracle in y", "lambda=0.3, T=0.5 T_c",
        diff <= 1e-8, diff, 1e-8);
}

void scale_covariance(std::vector<CheckResult>& out) {
    const double kb = 0.08617333262; // meV/K
    const GapSolver base(MaterialParams{0.3, 1.0, kb});
    const GapSolver doubled(MaterialParams{0.3, 2.0, kb});

    const double tc_ratio = doubled.transition_temperature() / base.transition_temperature();
    const double d0_ratio = doubled.delta0() / base.delta0();
    const double reduced_diff =
        std::max(std::abs(doubled.reduced_tau_c() - base.reduced_tau_c()) / base.reduced_tau_c(),
                 std::abs(doubled.reduced_delta0() - base.reduced_delta0()) /
                     base.reduced_delta0());

    const double y_base =
        base.solve_gap(0.5 * base.transition_temperature()).f / (1.0 * 1.0);
    const double y_doubled =
        doubled.solve_gap(0.5 * doubled.transition_temperature()).f / (2.0 * 2.0);
    const double y_diff = std::abs(y_doubled - y_base) / y_base;

    const double worst = std::max({std::abs(tc_ratio - 2.0), std::abs(d0_ratio - 2.0),
                                   reduced_diff, y_diff});
    add(out, "14 doubling debye_energy doubles T_c and Delta0; reduced stable",
        "lambda=0.3, meV/K units", worst <= 1e-12, worst, 1e-12);
}

void sweep_determinism(std::vector<CheckResult>& out) {
    const GapSolver solver(MaterialParams{0.3, 1.0, 1.0});
    const auto s1 = solver.sweep(16, solver::GridSpacing::Chebyshev);
    const auto s2 = solver.sweep(16, solver::GridSpacing::Chebyshev);
    const bool identical = output::sweep_csv(s1) == output::sweep_csv(s2);
    add(out, "xx repeated sweep is byte-identical", "lambda=0.3", identical, identical ? 0 : 1,
        0);
}

} // namespace

std::vector<CheckResult> kernel_and_quadrature_checks() {
    std::vector<CheckResult> out;
    kernel_exactness(out);
    kernel_calculus(out);
    kernel_series_agreement(out);
    kernel_flat_derivative_at_zero(out);
    kernel_monotone_tanh(out);
    quadrature_honesty(out);
    quadrature_linearity(out);
    quadrature_refinement(out);
    zero_edge_closed_form(out);
    delta0_identity(out);
    kernel_h_route(out);
    return out;
}

std::vector<CheckResult> coupling_checks(double coupling) {
    std::vector<CheckResult> out;
    const MaterialParams params{coupling, 1.0, 1.0};
    const GapSolver solver(params);
    const GapSolver tight(params, tight_solver(), tight_quadrature());

    root_consistency(out, solver);
    const auto sweep = solver.sweep(64, solver::GridSpacing::Chebyshev);
    sweep_monotonicity(out, solver, sweep);
    gap_equation_residual(out, solver, sweep);
    implicit_derivative_agreement(out, tight);
    endpoint_formulas(out, tight);
    asymptote_checks(out, tight);
    flatness_at_zero(out, solver);
    delta_prime_divergence(out, tight);
    monotone_in_tau_and_y(out, solver);
    mixed_partial_symmetry(out, tight);
    edge_continuity(out, solver);
    tc_oracle(out, solver);
    return out;
}

std::vector<CheckResult> cross_checks() {
    std::vector<CheckResult> out;
    brute_force_gap_oracle(out);
    scale_covariance(out);
    sweep_determinism(out);
    return out;
}

std::vector<CheckResult> full_suite(std::span<const double> couplings) {
    std::vector<CheckResult> out = kernel_and_quadrature_checks();
    for (double coupling : couplings) {
        const auto batch = coupling_checks(coupling);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    const auto cross = cross_checks();
    out.insert(out.end(), cross.begin(), cross.end());
    return out;
}

bool all_passed(std::span<const CheckResult> results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return true;
}

void print_table(std::ostream& out, std::span<const CheckResult> results) {
    std::size_t failures = 0;
    for (const auto& r : results) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-58s %-22s measured=%-12.4g threshold=%.4g",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.context.c_str(), r.measured,
                      r.threshold);
        out << line << '\n';
        if (!r.passed)
            ++failures;
    }
    out << (failures == 0 ? "all checks passed" : "FAILURES: ") ;
    if (failures != 0)
        out << failures << " of " << results.size();
    out << '\n';
}

} // namespace bcsgap::verify
