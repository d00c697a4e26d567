// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_GAP_EQUATION_HPP
#define BCSGAP_GAP_EQUATION_HPP

#include <cmath>
#include <vector>

#include "bcsgap/errors.hpp"
#include "bcsgap/quadrature.hpp"

namespace bcsgap::gap_equation {

using quadrature::QuadratureConfig;

/// Physical inputs of the model: the dimensionless coupling
/// lambda = U0 N0, the Debye energy in the caller's energy unit, and the
/// Boltzmann constant linking the energy and temperature units.
struct MaterialParams {
    double coupling;
    double debye_energy;
    double boltzmann;

    void validate() const {
        if (!(coupling > 0.0) || !std::isfinite(coupling) || !std::isfinite(1.0 / coupling))
            throw DomainError("MaterialParams: coupling must be positive and normal");
        if (!(debye_energy > 0.0) || !std::isfinite(debye_energy))
            throw DomainError("MaterialParams: debye_energy must be positive and finite");
        if (!(boltzmann > 0.0) || !std::isfinite(boltzmann))
            throw DomainError("MaterialParams: boltzmann must be positive and finite");
    }
};

/// Subsets of the domain W on which F is studied, in reduced coordinates
/// tau = k_B T/(hbar omega_D), y = Y/(hbar omega_D)^2:
///   W1 interior, W2 the tau = 0 edge, W3 the y = 0 edge, W4 the
///   tau = tau_c edge. The two boundary zeros of F get their own tags:
///   Boundary0 is (0, delta0^2), BoundaryTc is (tau_c, 0).
enum class Region { W1, W2, W3, W4, Boundary0, BoundaryTc };

/// A point of the reduced domain with its region tag. Build through
/// classify_point so that the tag and the domain bounds are consistent.
struct ReducedPoint {
    double tau;
    double y;
    Region region;
};

/// Classifies (tau, y) against W given the reduced transition temperature
/// and reduced zero-temperature gap. Throws DomainError for the excluded
/// corner (0, 0), for tau outside [0, tau_c], and for y outside
/// [0, 2 delta0^2).
ReducedPoint classify_point(double tau, double y, double tau_c, double delta0_reduced);

/// All reduced partial derivatives of F at one point, plus F itself.
/// Conversion to physical units: multiply F_T by k_B/E_D, F_Y by 1/E_D^2,
/// F_TT by (k_B/E_D)^2, F_TY by k_B/E_D^3 and F_YY by 1/E_D^4, with
/// E_D = hbar omega_D (F itself is dimensionless).
struct PartialDerivatives {
    double F;
    double F_T;
    double F_Y;
    double F_TT;
    double F_TY;
    double F_YY;
};

/// F(tau, y) = integral_0^1 h(tau, y, eps) deps - 1/lambda.
/// Zero exactly on the gap curve; strictly decreasing in y and in tau.
double F_value(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// dF/dtau = -1/(2 tau^2) integral_0^1 sech^2(eta) deps; 0 on the tau = 0
/// edge, strictly negative elsewhere.
double F_T(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// dF/dy = 1/(2 (2 tau)^3) integral_0^1 g(eta) deps for tau > 0; on the
/// tau = 0 edge the closed form -1/(2 y sqrt(1 + y)) is used instead of
/// quadrature. Strictly negative on all of W.
double F_Y(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// d2F/dtau2 = 1/tau^3 integral_0^1 (1 - eta tanh(eta)) sech^2(eta) deps.
/// Requires tau > 0.
double F_TT(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// d2F/dtau dy = 1/(8 tau^4) integral_0^1 [tanh(eta)/eta] sech^2(eta) deps.
/// Requires tau > 0; the integrand is evaluated through tanh_over_eta so it
/// stays finite as eta -> 0.
double F_TY(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// d2F/dy2 = -1/(4 (2 tau)^5) integral_0^1 G(eta) deps. Requires tau > 0.
double F_YY(const ReducedPoint& p, const MaterialParams& params, const QuadratureConfig& qc);

/// F and all five partials in one call (shares the point's breakpoint
/// grading; used by the implicit second derivative).
PartialDerivatives partials(const ReducedPoint& p, const MaterialParams& params,
                            const QuadratureConfig& qc);

/// Geometric seed partition for the adaptive integrator, anchored at the
/// eps-scale max(2 tau, sqrt(y)) on which every integrand above varies.
/// Without it an exponentially localized sech^2 peak at small tau can slip
/// between the nodes of a single coarse pass over [0, 1].
std::vector<double> layer_breakpoints(double tau, double y);

} // namespace bcsgap::gap_equation

#endif
