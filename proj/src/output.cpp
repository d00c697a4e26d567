// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#include "bcsgap/output.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace bcsgap::output {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v))
        return "nan"; // strip the platform-dependent sign of 0/0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

json constants_object(const solver::SweepResult& s) {
    const double ed = s.params.debye_energy;
    return json{
        {"coupling", s.params.coupling},
        {"debye_energy", ed},
        {"boltzmann", s.params.boltzmann},
        {"T_c", s.T_c},
        {"tau_c", s.params.boltzmann * s.T_c / ed},
        {"Delta0", s.Delta0},
        {"delta0_reduced", s.Delta0 / ed},
        {"fprime_Tc", s.fprime_Tc},
        {"fsecond_Tc", s.fsecond_Tc},
    };
}

json point_object(const solver::GapPoint& p, const solver::SweepResult& constants) {
    const double asym = solver::GapSolver::asymptote_near_tc(p.T, constants);
    return json{
        {"T", p.T},
        {"tau", p.tau},
        {"f", p.f},
        {"delta", p.delta},
        {"f_prime", p.f_prime},
        {"f_second", p.f_second},
        {"residual", p.residual},
        {"asymptote", asym},
        {"asymptote_ratio", p.f / asym},
    };
}

} // namespace

std::string sweep_csv(const solver::SweepResult& sweep) {
    std::ostringstream out;
    out << "T,tau,f,delta,f_prime,f_second,residual,asymptote,asymptote_ratio\n";
    for (const auto& p : sweep.points) {
        const double asym = solver::GapSolver::asymptote_near_tc(p.T, sweep);
        out << format_double(p.T) << ',' << format_double(p.tau) << ',' << format_double(p.f)
            << ',' << format_double(p.delta) << ',' << format_double(p.f_prime) << ','
            << format_double(p.f_second) << ',' << format_double(p.residual) << ','
            << format_double(asym) << ',' << format_double(p.f / asym) << '\n';
    }
    return out.str();
}

std::string sweep_json(const solver::SweepResult& sweep) {
    json points = json::array();
    for (const auto& p : sweep.points)
        points.push_back(point_object(p, sweep));
    const json doc{{"constants", constants_object(sweep)}, {"points", points}};
    return doc.dump(2) + "\n";
}

std::string point_csv(const solver::GapPoint& p, const solver::DeltaDerivative& dd,
                      const solver::SweepResult& constants) {
    const double asym = solver::GapSolver::asymptote_near_tc(p.T, constants);
    std::ostringstream out;
    out << "T,tau,f,delta,delta_prime,f_prime,f_second,residual,asymptote,asymptote_ratio\n";
    out << format_double(p.T) << ',' << format_double(p.tau) << ',' << format_double(p.f) << ','
        << format_double(p.delta) << ','
        << (dd.divergent ? std::string("divergent") : format_double(dd.delta_prime)) << ','
        << format_double(p.f_prime) << ',' << format_double(p.f_second) << ','
        << format_double(p.residual) << ',' << format_double(asym) << ','
        << format_double(p.f / asym) << '\n';
    return out.str();
}

std::string point_json(const solver::GapPoint& p, const solver::DeltaDerivative& dd,
                       const solver::SweepResult& constants) {
    json point = point_object(p, constants);
    if (dd.divergent)
        point["delta_prime"] = json{{"divergent", true}};
    else
        point["delta_prime"] = dd.delta_prime;
    const json doc{{"constants", constants_object(constants)}, {"point", point}};
    return doc.dump(2) + "\n";
}

std::string constants_csv(const solver::SweepResult& s) {
    const double ed = s.params.debye_energy;
    std::ostringstream out;
    out << "coupling,debye_energy,boltzmann,T_c,tau_c,Delta0,delta0_reduced,fprime_Tc,fsecond_Tc\n"
        << format_double(s.params.coupling) << ',' << format_double(ed) << ','
        << format_double(s.params.boltzmann) << ',' << format_double(s.T_c) << ','
        << format_double(s.params.boltzmann * s.T_c / ed) << ',' << format_double(s.Delta0)
        << ',' << format_double(s.Delta0 / ed) << ',' << format_double(s.fprime_Tc) << ','
        << format_double(s.fsecond_Tc) << '\n';
    return out.str();
}

std::string constants_json(const solver::SweepResult& s) {
    return constants_object(s).dump(2) + "\n";
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (first) {
            table.header = cells;
            first = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& cell : cells) {
            if (cell == "divergent")
                row.push_back(-std::numeric_limits<double>::infinity());
            else
                row.push_back(std::strtod(cell.c_str(), nullptr));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace bcsgap::output
