// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcsgap/kernels.hpp"
#include "bcsgap/output.hpp"
#include "bcsgap/solver.hpp"
#include "bcsgap/verify.hpp"

namespace py = pybind11;

using bcsgap::gap_equation::MaterialParams;
using bcsgap::kernels::Eta;
using bcsgap::quadrature::QuadratureConfig;
using bcsgap::solver::DeltaDerivative;
using bcsgap::solver::GapPoint;
using bcsgap::solver::GapSolver;
using bcsgap::solver::GridSpacing;
using bcsgap::solver::SolverConfig;
using bcsgap::solver::SweepResult;

namespace {

GridSpacing spacing_from_string(const std::string& s) {
    if (s == "cheb" || s == "chebyshev")
        return GridSpacing::Chebyshev;
    if (s == "uniform")
        return GridSpacing::Uniform;
    throw bcsgap::DomainError("grid must be 'cheb' or 'uniform'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "BCS-Bogoliubov gap equation solver";

    py::class_<MaterialParams>(m, "MaterialParams")
        .def(py::init([](double coupling, double debye_energy, double boltzmann) {
                 MaterialParams p{coupling, debye_energy, boltzmann};
                 p.validate();
                 return p;
             }),
             py::arg("coupling"), py::arg("debye_energy") = 1.0, py::arg("boltzmann") = 1.0)
        .def_readonly("coupling", &MaterialParams::coupling)
        .def_readonly("debye_energy", &MaterialParams::debye_energy)
        .def_readonly("boltzmann", &MaterialParams::boltzmann);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init([](double abs_tol, double rel_tol, int max_subdivisions) {
                 QuadratureConfig c{abs_tol, rel_tol, max_subdivisions};
                 c.validate();
                 return c;
             }),
             py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-10,
             py::arg("max_subdivisions") = 60)
        .def_readonly("abs_tol", &QuadratureConfig::abs_tol)
        .def_readonly("rel_tol", &QuadratureConfig::rel_tol)
        .def_readonly("max_subdivisions", &QuadratureConfig::max_subdivisions);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init([](double residual_tol, double y_tol, int max_iterations, double fd_step) {
                 SolverConfig c{residual_tol, y_tol, max_iterations, fd_step};
                 c.validate();
                 return c;
             }),
             py::arg("residual_tol") = 1e-10, py::arg("y_tol") = 1e-14,
             py::arg("max_iterations") = 200, py::arg("fd_step") = 1e-3)
        .def_readonly("residual_tol", &SolverConfig::residual_tol)
        .def_readonly("y_tol", &SolverConfig::y_tol)
        .def_readonly("max_iterations", &SolverConfig::max_iterations)
        .def_readonly("fd_step", &SolverConfig::fd_step);

    py::class_<GapPoint>(m, "GapPoint")
        .def_readonly("T", &GapPoint::T)
        .def_readonly("tau", &GapPoint::tau)
        .def_readonly("f", &GapPoint::f)
        .def_readonly("delta", &GapPoint::delta)
        .def_readonly("f_prime", &GapPoint::f_prime)
        .def_readonly("f_second", &GapPoint::f_second)
        .def_readonly("residual", &GapPoint::residual)
        .def("__repr__", [](const GapPoint& p) {
            return "GapPoint(T=" + bcsgap::output::format_double(p.T) +
                   ", delta=" + bcsgap::output::format_double(p.delta) + ")";
        });

    py::class_<DeltaDerivative>(m, "DeltaDerivative")
        .def_readonly("delta", &DeltaDerivative::delta)
        .def_readonly("delta_prime", &DeltaDerivative::delta_prime)
        .def_readonly("divergent", &DeltaDerivative::divergent);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("T_c", &SweepResult::T_c)
        .def_readonly("Delta0", &SweepResult::Delta0)
        .def_readonly("fprime_Tc", &SweepResult::fprime_Tc)
        .def_readonly("fsecond_Tc", &SweepResult::fsecond_Tc)
        .def_readonly("points", &SweepResult::points)
        .def("to_csv", [](const SweepResult& s) { return bcsgap::output::sweep_csv(s); })
        .def("to_json", [](const SweepResult& s) { return bcsgap::output::sweep_json(s); });

    py::class_<GapSolver>(m, "GapSolver")
        .def(py::init<MaterialParams, SolverConfig, QuadratureConfig>(), py::arg("params"),
             py::arg("solver_config") = SolverConfig{}, py::arg("quad_config") = QuadratureConfig{})
        .def_property_readonly("delta0", &GapSolver::delta0)
        .def_property_readonly("transition_temperature", &GapSolver::transition_temperature)
        .def_property_readonly("reduced_tau_c", &GapSolver::reduced_tau_c)
        .def_property_readonly("reduced_delta0", &GapSolver::reduced_delta0)
        .def_property_readonly("fprime_at_tc", &GapSolver::fprime_at_tc)
        .def_property_readonly("fsecond_at_tc", &GapSolver::fsecond_at_tc)
        .def("solve_gap", &GapSolver::solve_gap, py::arg("T"))
        .def("solve_point", &GapSolver::solve_point, py::arg("T"))
        .def("f_prime", &GapSolver::f_prime, py::arg("T"), py::arg("solved"))
        .def("f_second", &GapSolver::f_second, py::arg("T"), py::arg("solved"))
        .def("asymptote", &GapSolver::asymptote, py::arg("T"))
        .def("delta_and_derivative", &GapSolver::delta_and_derivative, py::arg("point"))
        .def("make_grid",
             [](const GapSolver& s, int points, const std::string& grid) {
                 return s.make_grid(points, spacing_from_string(grid));
             },
             py::arg("points"), py::arg("grid") = "cheb")
        .def("sweep",
             [](const GapSolver& s, int points, const std::string& grid) {
                 return s.sweep(points, spacing_from_string(grid));
             },
             py::arg("points") = 64, py::arg("grid") = "cheb")
        .def("sweep_temperatures",
             [](const GapSolver& s, const std::vector<double>& temps) {
                 return s.sweep(std::span<const double>(temps));
             },
             py::arg("temperatures"));

    m.def("delta0", &bcsgap::solver::delta0, py::arg("params"),
          "Delta0 = debye_energy / sinh(1/coupling)");
    m.def("tanh_over_eta",
          [](double eta) { return bcsgap::kernels::tanh_over_eta(Eta(eta)); }, py::arg("eta"));
    m.def("fn_g", [](double eta) { return bcsgap::kernels::fn_g(Eta(eta)); }, py::arg("eta"));
    m.def("fn_G", [](double eta) { return bcsgap::kernels::fn_G(Eta(eta)); }, py::arg("eta"));
    m.def("kernel_h", &bcsgap::kernels::kernel_h, py::arg("tau"), py::arg("y"), py::arg("eps"));

    m.def("run_verification",
          [](const std::vector<double>& couplings) {
              const auto results =
                  bcsgap::verify::full_suite(std::span<const double>(couplings));
              py::list out;
              for (const auto& r : results)
                  out.append(py::make_tuple(r.name, r.context, r.passed, r.measured,
                                            r.threshold));
              return out;
          },
          py::arg("couplings"), "Run the verification suite; returns (name, context, passed, "
                                "measured, threshold) tuples");

    m.attr("__version__") = "0.1.0";
}
