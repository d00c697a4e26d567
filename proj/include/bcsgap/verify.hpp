// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_VERIFY_HPP
#define BCSGAP_VERIFY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bcsgap::verify {

/// Outcome of one verification check. `measured` is the quantity the check
/// compares against `threshold` (its meaning is check-specific and stated
/// in the name); checks that demand bit-exact equality report a mismatch
/// count with threshold 0.
struct CheckResult {
    std::string name;
    std::string context; // e.g. "lambda=0.3"
    bool passed;
    double measured;
    double threshold;
};

/// Checks that do not depend on the coupling: kernel exactness and
/// calculus, series/direct agreement in extended precision, quadrature
/// honesty, and the zero-temperature closed-form edge.
std::vector<CheckResult> kernel_and_quadrature_checks();

/// The coupling-dependent battery, run in reduced units (debye_energy = 1,
/// boltzmann = 1): root consistency, sweep monotonicity, gap-equation
/// residuals, implicit-derivative agreement, endpoint formulas, the linear
/// asymptote, flatness at zero, and the square-root divergence of Delta'.
std::vector<CheckResult> coupling_checks(double coupling);

/// Cross-cutting checks: transition-temperature and gap oracles built from
/// an independent Romberg integrator, sweep determinism, and scale
/// covariance under doubling of the Debye energy.
std::vector<CheckResult> cross_checks();

/// Everything above, for each coupling in the list.
std::vector<CheckResult> full_suite(std::span<const double> couplings);

bool all_passed(std::span<const CheckResult> results);
void print_table(std::ostream& out, std::span<const CheckResult> results);

} // namespace bcsgap::verify

#endif
