// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bcsgap::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Interval {
    double a;
    double b;
    double value;
    double error;
    int depth;
};

Interval evaluate_gk15(const Integrand& phi, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = phi(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = phi(center - dx) + phi(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) // xgk[1], xgk[3], xgk[5] are the Gauss abscissae
            result_gauss += kWg[j / 2] * fsum;
    }

    const double value = result_kronrod * half;
    const double error = std::abs((result_kronrod - result_gauss) * half);
    return Interval{a, b, value, error, depth};
}

QuadratureResult integrate_partition(const Integrand& phi, const QuadratureConfig& config,
                                     const std::vector<double>& nodes) {
    config.validate();

    std::vector<Interval> intervals;
    intervals.reserve(64);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        intervals.push_back(evaluate_gk15(phi, nodes[i], nodes[i + 1], 0));

    int subdivisions = 0;
    for (;;) {
        double total_value = 0.0;
        double total_error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            total_value += intervals[i].value;
            total_error += intervals[i].error;
            if (intervals[i].error > intervals[worst].error)
                worst = i;
        }

        const double tolerance =
            std::max(config.abs_tol, config.rel_tol * std::abs(total_value));
        if (total_error <= tolerance)
            return QuadratureResult{total_value, total_error, subdivisions};

        // Split the interval with the largest error estimate. The linear scan
        // keeps the refinement order (and hence the result) deterministic.
        const Interval piece = intervals[worst];
        if (piece.depth >= config.max_subdivisions)
            throw ToleranceNotReached(
                "integrate: subdivision limit reached before tolerance", total_value,
                total_error);

        const double mid = 0.5 * (piece.a + piece.b);
        intervals[worst] = evaluate_gk15(phi, piece.a, mid, piece.depth + 1);
        intervals.push_back(evaluate_gk15(phi, mid, piece.b, piece.depth + 1));
        ++subdivisions;
    }
}

} // namespace

QuadratureResult integrate(const Integrand& phi, const QuadratureConfig& config) {
    return integrate_partition(phi, config, {0.0, 1.0});
}

QuadratureResult integrate(const Integrand& phi, const QuadratureConfig& config,
                           std::span<const double> interior_breakpoints) {
    std::vector<double> nodes;
    nodes.reserve(interior_breakpoints.size() + 2);
    nodes.push_back(0.0);
    for (double b : interior_breakpoints)
        if (b > nodes.back() && b < 1.0)
            nodes.push_back(b);
    nodes.push_back(1.0);
    return integrate_partition(phi, config, nodes);
}

} // namespace bcsgap::quadrature
