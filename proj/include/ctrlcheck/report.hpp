// report.hpp — deterministic serialization of verdict reports.
//
// Both renderers are pure functions of the report contents and format
// numbers with fixed rules, so re-running a command on the same input yields
// byte-identical output. Timing is included only when explicitly requested.
#pragma once

#include "ctrlcheck/verdict.hpp"

#include <json.hpp>

#include <string>

namespace ctrlcheck {

// Shortest %g rendering with 12 significant digits (fixed across platforms).
std::string format_number(double x);

std::string to_text(const VerdictReport& report, bool with_timings = false);
nlohmann::ordered_json to_json(const VerdictReport& report, bool with_timings = false);

// Single-line digest used by the sweep command: strongest analytic
// conclusion, numeric dimension, and classification.
std::string summary_line(const VerdictReport& report);

} // namespace ctrlcheck
