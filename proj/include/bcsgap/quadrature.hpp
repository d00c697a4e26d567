// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_QUADRATURE_HPP
#define BCSGAP_QUADRATURE_HPP

#include <functional>
#include <span>

#include "bcsgap/errors.hpp"

namespace bcsgap::quadrature {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 60; // bisection levels per interval

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
            throw DomainError("QuadratureConfig: tolerances must be positive, max_subdivisions >= 1");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7, K15) integration of phi over [0, 1].
///
/// Bisects the interval with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// ToleranceNotReached once any interval would exceed max_subdivisions
/// bisection levels. Deterministic for fixed inputs.
QuadratureResult integrate(const Integrand& phi, const QuadratureConfig& config);

/// Same rule, but the adaptive refinement starts from the partition induced
/// by the given breakpoints (strictly increasing, inside (0, 1)). Callers
/// that know their integrand's boundary-layer scale seed it here so that an
/// exponentially localized peak cannot be missed by the first coarse pass.
QuadratureResult integrate(const Integrand& phi, const QuadratureConfig& config,
                           std::span<const double> interior_breakpoints);

} // namespace bcsgap::quadrature

#endif
