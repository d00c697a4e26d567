// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_SOLVER_HPP
#define BCSGAP_SOLVER_HPP

#include <span>
#include <vector>

#include "bcsgap/gap_equation.hpp"
#include "bcsgap/quadrature.hpp"

namespace bcsgap::solver {

using gap_equation::MaterialParams;
using quadrature::QuadratureConfig;

struct SolverConfig {
    double residual_tol = 1e-10; // on |F| at the accepted root
    double y_tol = 1e-14;        // bracket-width stop, relative to the initial bracket
    int max_iterations = 200;
    double fd_step = 1e-3;       // relative step for verification differences

    void validate() const {
        if (!(residual_tol > 0.0) || !(y_tol > 4.0 * 2.220446049250313e-16) ||
            max_iterations < 1 || !(fd_step > 0.0))
            throw DomainError("SolverConfig: fields must be positive, y_tol > 4*eps");
    }
};

/// One solved temperature sample, in physical units. f_prime/f_second are
/// NaN until filled by the derivative operations.
struct GapPoint {
    double T;
    double tau;
    double f;
    double delta;
    double f_prime;
    double f_second;
    double residual;
};

/// Delta(T) and its derivative. At T_c the derivative diverges to -inf;
/// `divergent` marks that case explicitly.
struct DeltaDerivative {
    double delta;
    double delta_prime;
    bool divergent;
};

enum class GridSpacing { Chebyshev, Uniform };

struct SweepResult {
    MaterialParams params;
    double T_c;
    double Delta0;
    double fprime_Tc;
    double fsecond_Tc;
    std::vector<GapPoint> points;
};

/// Delta0 = hbar omega_D / sinh(1/lambda); for 1/lambda > 700 the
/// equivalent tail 2 hbar omega_D exp(-1/lambda) avoids sinh overflow.
double delta0(const MaterialParams& params);

/// Gap-equation solver for one material. The transition temperature and
/// zero-temperature gap are computed once at construction; all further
/// operations are pure and may run concurrently on one instance.
class GapSolver {
public:
    explicit GapSolver(MaterialParams params, SolverConfig solver_cfg = {},
                       QuadratureConfig quad_cfg = {});

    const MaterialParams& params() const { return params_; }
    const SolverConfig& solver_config() const { return solver_cfg_; }
    const QuadratureConfig& quadrature_config() const { return quad_cfg_; }

    double delta0() const { return delta0_reduced_ * params_.debye_energy; }
    double transition_temperature() const { return temperature_of(tau_c_); }
    double reduced_delta0() const { return delta0_reduced_; }
    double reduced_tau_c() const { return tau_c_; }

    /// Solves F(T, Y) = 0 for Y at the given temperature. Endpoints within
    /// 1e-12 * T_c of 0 or T_c return the exact values Delta0^2 and 0.
    /// Derivative fields are left NaN.
    GapPoint solve_gap(double T) const;

    /// f'(T) = -F_T/F_Y at the solved point; 0 at T = 0 and the closed
    /// form 8 k_B^2 T_c I[sech^2]/I[g] at T = T_c.
    double f_prime(double T, const GapPoint& solved) const;

    /// f''(T) from the implicit second-derivative formula; 0 at T = 0 and
    /// the three-term closed form at T = T_c.
    double f_second(double T, const GapPoint& solved) const;

    /// The endpoint closed forms on their own (physical units).
    double fprime_at_tc() const { return fprime_tc_; }
    double fsecond_at_tc() const { return fsecond_tc_; }

    /// Linear law -f'(T_c) (T_c - T) describing f near the transition.
    double asymptote(double T) const;
    static double asymptote_near_tc(double T, const SweepResult& constants);

    /// Delta = sqrt(f) and Delta' = f'/(2 sqrt(f)); divergent at T_c.
    DeltaDerivative delta_and_derivative(const GapPoint& point) const;

    /// Temperature grid over [0, T_c]. Chebyshev spacing clusters nodes
    /// toward T_c; its interior nodes start at T_c/8 because below that the
    /// squared gap equals Delta0^2 to double precision and extra nodes
    /// would tabulate a constant. Uniform spacing covers [0, T_c] evenly.
    std::vector<double> make_grid(int points, GridSpacing spacing) const;

    /// Solves every grid point and fills both derivatives. Failures are
    /// collected per index and reported together; nothing partial is
    /// returned.
    SweepResult sweep(std::span<const double> temperatures) const;
    SweepResult sweep(int points, GridSpacing spacing) const;

    /// solve_gap plus both derivative fields filled.
    GapPoint solve_point(double T) const;

    /// The derived constants alone (empty point list).
    SweepResult constants() const {
        return SweepResult{params_, transition_temperature(), delta0(), fprime_tc_,
                           fsecond_tc_, {}};
    }

private:
    double temperature_of(double tau) const {
        return tau * params_.debye_energy / params_.boltzmann;
    }
    double tau_of(double T) const { return params_.boltzmann * T / params_.debye_energy; }
    double definition_integral(double x) const;
    void solve_transition_temperature();
    void compute_endpoint_derivatives();
    gap_equation::ReducedPoint classify(double tau, double y) const;

    MaterialParams params_;
    SolverConfig solver_cfg_;
    QuadratureConfig quad_cfg_;
    double delta0_reduced_ = 0.0;
    double tau_c_ = 0.0;
    double fprime_tc_ = 0.0;  // k_B E_D * y'(tau_c)
    double fsecond_tc_ = 0.0; // k_B^2 * y''(tau_c)
};

} // namespace bcsgap::solver

#endif
