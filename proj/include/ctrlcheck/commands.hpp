// commands.hpp — the three CLI commands, separated from argument parsing so
// tests can drive them directly against string streams.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ctrlcheck {

// Process exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitGoldenMismatch = 4;

struct AnalyzeOptions {
    std::string path;
    double tol_override{-1.0};  // < 0: no --tol flag
    double env_tol{-1.0};       // < 0: CTRLCHECK_TOL unset
    bool json{false};
    bool witnesses{true};
    bool timings{false};
};

// Analyze one spec file and print a report. Tolerance precedence:
// --tol flag, then the file's own field, then CTRLCHECK_TOL, then 1e-10.
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct Table2Options {
    int max_n{8};
};

// Recompute the closure-dimension grid (six model/dipole families,
// N = 2..max_n) and compare against the embedded expected values.
int cmd_table2(const Table2Options& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::string template_path;
    // Parameter name -> values, in command-line order. Supported names:
    // d_<k>, E_<k> (patch the resolved arrays) and B (requires a morse level
    // descriptor in the template).
    std::vector<std::pair<std::string, std::vector<double>>> params;
    double tol_override{-1.0};
    double env_tol{-1.0};
    bool json{false};
    bool witnesses{true};
};

// Analyze the Cartesian grid of parameter substitutions, one line per point,
// in grid order (points run concurrently, output order is deterministic).
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

} // namespace ctrlcheck
