// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/kernels.hpp"

#include <cmath>

namespace bcsgap::kernels {

double tanh_over_eta(Eta eta) {
    const double e = eta.value();
    if (e == 0.0)
        return 1.0;
    return std::tanh(e) / e;
}

namespace {

// Even Taylor coefficients of g and G about eta = 0, exact rationals,
// generated once with sympy:
//   >>> g = (1/eta**2)*(1/cosh(eta)**2 - tanh(eta)/eta)
//   >>> series(g, eta, 0, 16)
// g truncated after eta^12 is within 4e-15 relative at its switch point
// 0.125; G truncated after eta^18 is within 1e-14 at its switch point 0.25.
constexpr double kGSeries[] = {
    -2.0 / 3.0,
    8.0 / 15.0,
    -34.0 / 105.0,
    496.0 / 2835.0,
    -2764.0 / 31185.0,
    87376.0 / 2027025.0,
    -1859138.0 / 91216125.0,
};

constexpr double kGBigSeries[] = {
    -16.0 / 15.0,
    136.0 / 105.0,
    -992.0 / 945.0,
    22112.0 / 31185.0,
    -174752.0 / 405405.0,
    7436552.0 / 30405375.0,
    -204946624.0 / 1550674125.0,
    14203557184.0 / 206239658625.0,
    -151107728672.0 / 4331032831125.0,
    911419934896.0 / 52736693884875.0,
};

template <std::size_t N>
double horner_even(const double (&c)[N], double e) {
    const double u = e * e;
    double acc = c[N - 1];
    for (int k = static_cast<int>(N) - 2; k >= 0; --k)
        acc = acc * u + c[static_cast<std::size_t>(k)];
    return acc;
}

} // namespace

double fn_g(Eta eta) {
    const double e = eta.value();
    if (e < kSeriesSwitchG)
        return horner_even(kGSeries, e);
    if (e > kCoshOverflowGuard) {
        // tanh(eta) = 1 and sech^2(eta) underflows; only -tanh(eta)/eta^3 survives.
        return -1.0 / (e * e * e);
    }
    const double sech = 1.0 / std::cosh(e);
    return (sech * sech - std::tanh(e) / e) / (e * e);
}

double fn_G(Eta eta) {
    const double e = eta.value();
    if (e < kSeriesSwitchBigG)
        return horner_even(kGBigSeries, e);
    if (e > kCoshOverflowGuard)
        return 3.0 * fn_g(eta) / (e * e);
    const double sech = 1.0 / std::cosh(e);
    const double g = (sech * sech - std::tanh(e) / e) / (e * e);
    return (3.0 * g + 2.0 * (std::tanh(e) / e) * sech * sech) / (e * e);
}

double kernel_h(double tau, double y, double eps) {
    if (tau == 0.0 && y == 0.0)
        throw DomainError("kernel_h: the corner T = 0, Y = 0 is outside the domain");
    const double s2 = eps * eps + y;
    if (tau == 0.0)
        return 1.0 / std::sqrt(s2);
    // tanh(s/(2 tau))/s written as [tanh(eta)/eta]/(2 tau); finite as s -> 0.
    const double s = std::sqrt(s2);
    return tanh_over_eta(Eta(s / (2.0 * tau))) / (2.0 * tau);
}

} // namespace bcsgap::kernels
