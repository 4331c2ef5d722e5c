#pragma once

// Serializations of study reports and convergence verdicts. JSON output is
// versioned by a top-level "schema" field; numbers are written with enough
// digits to round-trip, so equal inputs give byte-identical files.

#include "hyperlab/case_studies.hpp"
#include "hyperlab/convergence.hpp"

#include <json.hpp>

#include <string>

namespace hyperlab::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const cases::StudyReport& report);
std::string to_text(const cases::StudyReport& report);
// One CSV per table: header row, then rows.
std::string to_csv(const cases::Table& table);
// Whitespace-separated columns with a '#' header line, for gnuplot.
std::string to_gnuplot(const cases::Table& table);

nlohmann::json to_json(const conv::Classification& c, const conv::FunctionFamily& f);
std::string to_text(const conv::Classification& c, const conv::FunctionFamily& f);
// Header row, then one row per (probe, n) of the infinitesimal test.
std::string to_csv(const conv::UniformVerdict& verdict);

// Fixed-format number text shared by all writers.
std::string format_number(double value);

}  // namespace hyperlab::report
