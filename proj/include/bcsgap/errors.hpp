// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_ERRORS_HPP
#define BCSGAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcsgap {

/// Argument outside the domain on which an operation is defined
/// (e.g. the excluded corner tau = y = 0).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The adaptive integrator exhausted its subdivision budget before the
/// requested tolerance was met. The partial result is never returned.
class ToleranceNotReached : public std::runtime_error {
public:
    ToleranceNotReached(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value(value), error_estimate(error_estimate) {}
    double value;
    double error_estimate;
};

/// No sign change could be bracketed for the transition-temperature solve
/// (coupling too small for the overflow-safe search range).
class NoBracket : public std::runtime_error {
public:
    explicit NoBracket(const std::string& what) : std::runtime_error(what) {}
};

/// The gap solve's initial bracket does not enclose a root beyond tolerance;
/// indicates inconsistent inputs rather than a convergence failure.
class BracketFailure : public std::runtime_error {
public:
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

/// |dF/dY| collapsed to rounding level, so the implicit-derivative ratio
/// is numerically meaningless. Not expected anywhere on the domain.
class DegenerateDerivative : public std::runtime_error {
public:
    explicit DegenerateDerivative(const std::string& what) : std::runtime_error(what) {}
};

/// One or more points of a temperature sweep failed; carries the indices.
class SweepError : public std::runtime_error {
public:
    SweepError(const std::string& what, std::vector<std::size_t> failed_indices)
        : std::runtime_error(what), failed_indices(std::move(failed_indices)) {}
    std::vector<std::size_t> failed_indices;
};

} // namespace bcsgap

#endif
