// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcsgap/output.hpp"
#include "bcsgap/solver.hpp"
#include "bcsgap/verify.hpp"

namespace {

using bcsgap::output::Format;
using bcsgap::output::format_double;

struct Options {
    double coupling = 0.0;
    double debye_energy = 1.0;
    double kb = 0.08617333262; // meV/K
    bool reduced = false;
    double temperature = 0.0;
    int points = 64;
    std::string grid = "cheb";
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double residual_tol = 1e-10;
    std::string format = "csv";
    std::string output_path;
};

void add_common_flags(CLI::App* cmd, Options& o, bool coupling_required) {
    auto* coupling = cmd->add_option("--coupling", o.coupling, "dimensionless coupling U0*N0");
    if (coupling_required)
        coupling->required();
    cmd->add_option("--debye-energy", o.debye_energy, "Debye energy (meV by convention)");
    cmd->add_option("--kb", o.kb, "Boltzmann constant (energy/kelvin)");
    cmd->add_flag("--reduced", o.reduced,
                  "reduced units: overrides --debye-energy and --kb with 1");
    cmd->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--residual-tol", o.residual_tol, "solver residual tolerance on |F|");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output_path, "write to file instead of stdout");
}

bcsgap::solver::GapSolver make_solver(const Options& o) {
    const double ed = o.reduced ? 1.0 : o.debye_energy;
    const double kb = o.reduced ? 1.0 : o.kb;
    bcsgap::solver::SolverConfig scfg;
    scfg.residual_tol = o.residual_tol;
    bcsgap::quadrature::QuadratureConfig qc;
    qc.abs_tol = o.abs_tol;
    qc.rel_tol = o.rel_tol;
    return bcsgap::solver::GapSolver(
        bcsgap::gap_equation::MaterialParams{o.coupling, ed, kb}, scfg, qc);
}

void emit(const Options& o, const std::string& text) {
    if (o.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.output_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + o.output_path);
    file << text;
}

std::string tc_output(const bcsgap::solver::GapSolver& solver, Format format) {
    const double tc = solver.transition_temperature();
    const double tau_c = solver.reduced_tau_c();
    if (format == Format::Json)
        return std::string("{\n  \"T_c\": ") + format_double(tc) + ",\n  \"tau_c\": " +
               format_double(tau_c) + "\n}\n";
    return "T_c,tau_c\n" + format_double(tc) + "," + format_double(tau_c) + "\n";
}

std::string delta0_output(const bcsgap::solver::GapSolver& solver, Format format) {
    const double d0 = solver.delta0();
    const double d0r = solver.reduced_delta0();
    if (format == Format::Json)
        return std::string("{\n  \"Delta0\": ") + format_double(d0) +
               ",\n  \"delta0_reduced\": " + format_double(d0r) + "\n}\n";
    return "Delta0,delta0_reduced\n" + format_double(d0) + "," + format_double(d0r) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bcsgap: solver and verification harness for the BCS-Bogoliubov gap equation"};
    app.require_subcommand(1);

    Options opts;

    CLI::App* tc = app.add_subcommand("tc", "transition temperature T_c");
    add_common_flags(tc, opts, true);

    CLI::App* d0 = app.add_subcommand("delta0", "zero-temperature gap Delta0");
    add_common_flags(d0, opts, true);

    CLI::App* solve = app.add_subcommand("solve", "solve the gap equation at one temperature");
    add_common_flags(solve, opts, true);
    solve->add_option("--temperature", opts.temperature, "temperature (kelvin by convention)")
        ->required();

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate the gap curve over [0, T_c]");
    add_common_flags(sweep, opts, true);
    sweep->add_option("--points", opts.points, "number of grid points");
    sweep->add_option("--grid", opts.grid, "grid spacing rule")
        ->check(CLI::IsMember({"cheb", "uniform"}));

    CLI::App* asym = app.add_subcommand("asymptote",
                                        "compare f(T) against -f'(T_c) (T_c - T) near T_c");
    add_common_flags(asym, opts, true);
    asym->add_option("--temperature", opts.temperature, "temperature")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common_flags(verify, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format format = opts.format == "json" ? Format::Json : Format::Csv;

    try {
        if (tc->parsed()) {
            emit(opts, tc_output(make_solver(opts), format));
        } else if (d0->parsed()) {
            emit(opts, delta0_output(make_solver(opts), format));
        } else if (solve->parsed()) {
            const auto solver = make_solver(opts);
            const auto point = solver.solve_point(opts.temperature);
            const auto dd = solver.delta_and_derivative(point);
            const auto constants = solver.constants();
            emit(opts, format == Format::Json
                           ? bcsgap::output::point_json(point, dd, constants)
                           : bcsgap::output::point_csv(point, dd, constants));
        } else if (sweep->parsed()) {
            const auto solver = make_solver(opts);
            const auto spacing = opts.grid == "uniform"
                                     ? bcsgap::solver::GridSpacing::Uniform
                                     : bcsgap::solver::GridSpacing::Chebyshev;
            const auto result = solver.sweep(opts.points, spacing);
            emit(opts, format == Format::Json ? bcsgap::output::sweep_json(result)
                                              : bcsgap::output::sweep_csv(result));
        } else if (asym->parsed()) {
            const auto solver = make_solver(opts);
            const auto point = solver.solve_point(opts.temperature);
            const auto dd = solver.delta_and_derivative(point);
            const auto constants = solver.constants();
            emit(opts, format == Format::Json
                           ? bcsgap::output::point_json(point, dd, constants)
                           : bcsgap::output::point_csv(point, dd, constants));
        } else if (verify->parsed()) {
            std::vector<double> couplings;
            if (verify->count("--coupling"))
                couplings.push_back(opts.coupling);
            else
                couplings = {0.1, 0.3, 0.5};
            const auto results = bcsgap::verify::full_suite(couplings);
            std::ostringstream table;
            bcsgap::verify::print_table(table, results);
            emit(opts, table.str());
            return bcsgap::verify::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
