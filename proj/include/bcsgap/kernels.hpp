// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_KERNELS_HPP
#define BCSGAP_KERNELS_HPP

#include <cmath>

#include "bcsgap/errors.hpp"

namespace bcsgap::kernels {

/// Scaled quasiparticle energy eta = sqrt(xi^2 + Y)/(2 k_B T), dimensionless
/// and nonnegative. All closed-form kernels below are functions of eta.
class Eta {
public:
    explicit Eta(double value) : value_(value) {
        if (!(value >= 0.0) || !std::isfinite(value))
            throw DomainError("Eta: value must be finite and >= 0");
    }
    double value() const { return value_; }

private:
    double value_;
};

/// tanh(eta)/eta, continued with its limit 1 at eta = 0.
/// Strictly decreasing, range (0, 1].
double tanh_over_eta(Eta eta);

/// g(eta) = (1/eta^2) (1/cosh^2(eta) - tanh(eta)/eta), g(0) = -2/3.
/// Strictly negative on [0, inf), tends to 0 from below.
double fn_g(Eta eta);

/// G(eta) = (1/eta^2) {3 g(eta) + 2 tanh(eta)/(eta cosh^2(eta))}, G(0) = -16/15.
/// Satisfies g'(eta) = -eta G(eta); tends to 0 at infinity.
double fn_G(Eta eta);

/// Reduced two-branch integrand of the gap functional:
///   tau > 0:  tanh(sqrt(eps^2 + y)/(2 tau)) / sqrt(eps^2 + y)
///   tau = 0:  1/sqrt(eps^2 + y)   (requires y > 0)
/// Evaluated through tanh_over_eta so the eps^2 + y -> 0 limit 1/(2 tau)
/// is reached without 0/0. Throws DomainError at the excluded corner
/// tau = y = 0.
double kernel_h(double tau, double y, double eps);

/// Direct-formula/series switch points. Below them a truncated even series
/// is used. For g the direct subtraction of two O(1) terms agreeing through
/// O(eta^2) costs ~6 bits at 0.125; G nests that subtraction inside another
/// one (its information sits at O(eta^4) of the raw terms), so its switch
/// sits higher to keep the direct branch within ~1e-12 relative.
inline constexpr double kSeriesSwitchG = 0.125;
inline constexpr double kSeriesSwitchBigG = 0.25;

/// Above this, cosh^2(eta) overflows double range; the kernels return their
/// forced asymptotic tails g ~ -1/eta^3, G ~ 3 g/eta^2 instead.
inline constexpr double kCoshOverflowGuard = 350.0;

} // namespace bcsgap::kernels

#endif
