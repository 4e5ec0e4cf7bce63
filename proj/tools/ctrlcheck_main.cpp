// ctrlcheck_main.cpp — command-line front end.
//
//   ctrlcheck analyze <spec.json> [--tol X] [--json|--text] [--no-witness]
//                     [--timings] [--parallel]
//   ctrlcheck table2  [--max-n K] [--parallel]
//   ctrlcheck sweep   <template.json> --param name=v1,v2,... [--json]
//                     [--no-witness] [--tol X]
//
// CTRLCHECK_TOL overrides the built-in default tolerance (an explicit file
// field or --tol still wins). Exit codes: 0 ok, 2 input error, 3 internal
// inconsistency, 4 expected-grid mismatch.

#include "ctrlcheck/commands.hpp"
#include "ctrlcheck/kernels.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Returns -1 when CTRLCHECK_TOL is unset; exits with an input error when it
// is set but not a positive number.
double env_tolerance() {
    const char* raw = std::getenv("CTRLCHECK_TOL");
    if (raw == nullptr || *raw == '\0')
        return -1.0;
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(value > 0.0)) {
        std::cerr << "CTRLCHECK_TOL must be a positive number, got '" << raw << "'\n";
        std::exit(ctrlcheck::kExitInput);
    }
    return value;
}

// "name=v1,v2,..." -> (name, values). An empty value list is allowed and
// yields an empty sweep.
std::pair<std::string, std::vector<double>> parse_param(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError("--param", "expected name=v1,v2,... in '" + arg + "'");
    std::pair<std::string, std::vector<double>> out;
    out.first = arg.substr(0, eq);
    std::stringstream values(arg.substr(eq + 1));
    std::string item;
    while (std::getline(values, item, ',')) {
        if (item.empty())
            continue;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size())
            throw CLI::ValidationError("--param", "'" + item + "' is not a number in '" + arg + "'");
        out.second.push_back(v);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"controllability analysis of N-level systems driven by one dipole-coupled field"};
    app.require_subcommand(1);

    ctrlcheck::AnalyzeOptions analyze_opts;
    bool analyze_text = false;
    bool analyze_no_witness = false;
    bool parallel = false;
    auto* analyze = app.add_subcommand("analyze", "analyze one system spec file");
    analyze->add_option("spec", analyze_opts.path, "path to the spec file")->required();
    analyze->add_option("--tol", analyze_opts.tol_override,
                        "closure/membership tolerance (overrides file and environment)");
    analyze->add_flag("--json", analyze_opts.json, "machine-readable report");
    analyze->add_flag("--text", analyze_text, "human-readable report (default)");
    analyze->add_flag("--no-witness", analyze_no_witness, "skip constructive witnesses");
    analyze->add_flag("--timings", analyze_opts.timings,
                      "include wall-clock timing in the report (breaks byte-identical reruns)");
    analyze->add_flag("--parallel", parallel, "use the OpenMP kernel variants");

    ctrlcheck::Table2Options table2_opts;
    auto* table2 = app.add_subcommand("table2", "recompute the closure-dimension grid");
    table2->add_option("--max-n", table2_opts.max_n, "largest system size (2..8, default 8)");
    table2->add_flag("--parallel", parallel, "use the OpenMP kernel variants");

    ctrlcheck::SweepOptions sweep_opts;
    std::vector<std::string> raw_params;
    bool sweep_no_witness = false;
    auto* sweep = app.add_subcommand("sweep", "analyze a Cartesian grid of parameter overrides");
    sweep->add_option("template", sweep_opts.template_path, "path to the template spec file")
        ->required();
    sweep->add_option("--param", raw_params, "swept parameter, name=v1,v2,... (repeatable)")
        ->take_all();
    sweep->add_option("--tol", sweep_opts.tol_override, "closure/membership tolerance");
    sweep->add_flag("--json", sweep_opts.json, "one JSON object per point");
    sweep->add_flag("--no-witness", sweep_no_witness, "skip constructive witnesses");

    CLI11_PARSE(app, argc, argv);

    const double env_tol = env_tolerance();
    ctrlcheck::kernels::set_exec_mode(parallel ? ctrlcheck::kernels::ExecMode::parallel
                                               : ctrlcheck::kernels::ExecMode::serial);

    if (analyze->parsed()) {
        if (analyze_opts.json && analyze_text) {
            std::cerr << "analyze: --json and --text are mutually exclusive\n";
            return ctrlcheck::kExitInput;
        }
        analyze_opts.witnesses = !analyze_no_witness;
        analyze_opts.env_tol = env_tol;
        return ctrlcheck::cmd_analyze(analyze_opts, std::cout, std::cerr);
    }
    if (table2->parsed())
        return ctrlcheck::cmd_table2(table2_opts, std::cout, std::cerr);
    if (sweep->parsed()) {
        sweep_opts.witnesses = !sweep_no_witness;
        sweep_opts.env_tol = env_tol;
        try {
            for (const auto& raw : raw_params)
                sweep_opts.params.push_back(parse_param(raw));
        } catch (const CLI::ValidationError& e) {
            std::cerr << e.what() << "\n";
            return ctrlcheck::kExitInput;
        }
        return ctrlcheck::cmd_sweep(sweep_opts, std::cout, std::cerr);
    }
    return ctrlcheck::kExitInput;
}
