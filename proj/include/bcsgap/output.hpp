// Copyright (c) 2026 bcsgap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef BCSGAP_OUTPUT_HPP
#define BCSGAP_OUTPUT_HPP

#include <string>
#include <vector>

#include "bcsgap/solver.hpp"

namespace bcsgap::output {

enum class Format { Csv, Json };

/// 17-significant-digit decimal form; round-trips any double exactly.
std::string format_double(double v);

/// Sweep table. CSV columns, in order:
///   T,tau,f,delta,f_prime,f_second,residual,asymptote,asymptote_ratio
/// The ratio at T = T_c is 0/0 and serializes as nan. JSON mirrors the
/// field names under a top-level {"constants", "points"} object.
std::string sweep_csv(const solver::SweepResult& sweep);
std::string sweep_json(const solver::SweepResult& sweep);

/// Single solved point (the solve/asymptote subcommands). delta_prime
/// serializes as the literal "divergent" in CSV and as a tagged object in
/// JSON when Delta'(T) diverges at T_c.
std::string point_csv(const solver::GapPoint& point, const solver::DeltaDerivative& dd,
                      const solver::SweepResult& constants);
std::string point_json(const solver::GapPoint& point, const solver::DeltaDerivative& dd,
                       const solver::SweepResult& constants);

std::string constants_csv(const solver::SweepResult& constants);
std::string constants_json(const solver::SweepResult& constants);

/// Parses a CSV table produced by the writers above. Returns one row per
/// line after the header; "divergent" maps to -inf, "nan" to NaN. Used by
/// round-trip checks and available to downstream tooling.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

} // namespace bcsgap::output

#endif
