// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/gap_equation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bcsgap/kernels.hpp"

namespace bcsgap::gap_equation {

using kernels::Eta;

namespace {

void check_point(const ReducedPoint& p) {
    if (!(p.tau >= 0.0) || !(p.y >= 0.0) || !std::isfinite(p.tau) || !std::isfinite(p.y))
        throw DomainError("gap_equation: tau and y must be finite and nonnegative");
    if (p.tau == 0.0 && p.y == 0.0)
        throw DomainError("gap_equation: the corner (0, 0) is excluded from the domain");
}

template <class F>
double integrate_layered(F&& f, const ReducedPoint& p, const QuadratureConfig& qc) {
    const std::vector<double> bp = layer_breakpoints(p.tau, p.y);
    return quadrature::integrate(f, qc, bp).value;
}

double eta_at(double tau, double y, double eps) {
    return std::sqrt(eps * eps + y) / (2.0 * tau);
}

double sech2(double eta) {
    const double sech = 1.0 / std::cosh(eta);
    return sech * sech;
}

} // namespace

std::vector<double> layer_breakpoints(double tau, double y) {
    const double scale = std::max(2.0 * tau, std::sqrt(y));
    std::vector<double> pts;
    if (scale <= 0.0 || scale >= 0.5)
        return pts;
    double b = std::max(scale, 1e-13);
    while (b < 1.0) {
        pts.push_back(b);
        b *= 4.0;
    }
    return pts;
}

ReducedPoint classify_point(double tau, double y, double tau_c, double delta0_reduced) {
    if (!std::isfinite(tau) || !std::isfinite(y))
        throw DomainError("classify_point: tau and y must be finite");
    if (tau < 0.0 || y < 0.0)
        throw DomainError("classify_point: tau and y must be nonnegative");
    if (tau == 0.0 && y == 0.0)
        throw DomainError("classify_point: the corner (0, 0) is excluded from the domain");
    if (tau > tau_c)
        throw DomainError("classify_point: tau exceeds tau_c; no normal-state branch");
    const double y_max = 2.0 * delta0_reduced * delta0_reduced;
    if (y >= y_max)
        throw DomainError("classify_point: y outside [0, 2 delta0^2)");

    Region region = Region::W1;
    if (tau == 0.0)
        region = (y == delta0_reduced * delta0_reduced) ? Region::Boundary0 : Region::W2;
    else if (y == 0.0)
        region = (tau == tau_c) ? Region::BoundaryTc : Region::W3;
    else if (tau == tau_c)
        region = Region::W4;
    return ReducedPoint{tau, y, region};
}

double F_value(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc) {
    check_point(p);
    params.validate();
    const double inv_lambda = 1.0 / params.coupling;
    const double tau = p.tau;
    const double y = p.y;
    const double integral =
        integrate_layered([=](double eps) { return kernels::kernel_h(tau, y, eps); }, p, qc);
    return integral - inv_lambda;
}

double F_T(const ReducedPoint& p, const MaterialParams&, const QuadratureConfig& qc) {
    check_point(p);
    if (p.tau == 0.0)
        return 0.0; // the tau = 0 edge; the difference quotient vanishes there
    const double tau = p.tau;
    const double y = p.y;
    const double integral =
        integrate_layered([=](double eps) { return sech2(eta_at(tau, y, eps)); }, p, qc);
    return -integral / (2.0 * tau * tau);
}

double F_Y(const ReducedPoint& p, const MaterialParams&, const QuadratureConfig& qc) {
    check_point(p);
    const double tau = p.tau;
    const double y = p.y;
    if (tau == 0.0) {
        // Closed form of the tau = 0 edge; no quadrature involved.
        return -1.0 / (2.0 * y * std::sqrt(1.0 + y));
    }
    const double integral =
        integrate_layered([=](double eps) { return kernels::fn_g(Eta(eta_at(tau, y, eps))); },
                          p, qc);
    const double two_tau = 2.0 * tau;
    return integral / (2.0 * two_tau * two_tau * two_tau);
}

double F_TT(const ReducedPoint& p, const MaterialParams&, const QuadratureConfig& qc) {
    check_point(p);
    if (p.tau == 0.0)
        throw DomainError("F_TT: defined for tau > 0");
    const double tau = p.tau;
    const double y = p.y;
    const double integral = integrate_layered(
        [=](double eps) {
            const double eta = eta_at(tau, y, eps);
            return (1.0 - eta * std::tanh(eta)) * sech2(eta);
        },
        p, qc);
    return integral / (tau * tau * tau);
}

double F_TY(const ReducedPoint& p, const MaterialParams&, const QuadratureConfig& qc) {
    check_point(p);
    if (p.tau == 0.0)
        throw DomainError("F_TY: defined for tau > 0");
    const double tau = p.tau;
    const double y = p.y;
    const double integral = integrate_layered(
        [=](double eps) {
            const double eta = eta_at(tau, y, eps);
            return kernels::tanh_over_eta(Eta(eta)) * sech2(eta);
        },
        p, qc);
    const double tau2 = tau * tau;
    return integral / (8.0 * tau2 * tau2);
}

double F_YY(const ReducedPoint& p, const MaterialParams&, const QuadratureConfig& qc) {
    check_point(p);
    if (p.tau == 0.0)
        throw DomainError("F_YY: defined for tau > 0");
    const double tau = p.tau;
    const double y = p.y;
    const double integral =
        integrate_layered([=](double eps) { return kernels::fn_G(Eta(eta_at(tau, y, eps))); },
                          p, qc);
    const double two_tau = 2.0 * tau;
    const double tt2 = two_tau * two_tau;
    return -integral / (4.0 * tt2 * tt2 * two_tau);
}

PartialDerivatives partials(const ReducedPoint& p, const MaterialParams& params,
                            const QuadratureConfig& qc) {
    return PartialDerivatives{
        F_value(p, params, qc), F_T(p, params, qc),  F_Y(p, params, qc),
        F_TT(p, params, qc),    F_TY(p, params, qc), F_YY(p, params, qc),
    };
}

} // namespace bcsgap::gap_equation
