// commands.cpp — implementation of the CLI commands.

#include "ctrlcheck/commands.hpp"

#include "ctrlcheck/report.hpp"
#include "ctrlcheck/specfile.hpp"
#include "ctrlcheck/verdict.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ctrlcheck {

namespace {

double resolve_tolerance(const AnalyzeOptions& opts, bool file_has_tolerance,
                         double file_tolerance) {
    if (opts.tol_override > 0.0)
        return opts.tol_override;
    if (file_has_tolerance)
        return file_tolerance;
    if (opts.env_tol > 0.0)
        return opts.env_tol;
    return kDefaultTol;
}

} // namespace

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    SystemSpec spec;
    bool file_has_tolerance = false;
    try {
        std::ifstream in(opts.path);
        if (!in)
            throw SpecFileError("spec file: cannot open '" + opts.path + "'");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw SpecFileError("spec file: " + std::string(e.what()));
        }
        file_has_tolerance = doc.is_object() && doc.contains("tolerance");
        spec = spec_from_json(doc);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }
    spec.tolerance = resolve_tolerance(opts, file_has_tolerance, spec.tolerance);

    VerdictOptions vopts;
    vopts.with_witnesses = opts.witnesses;
    VerdictReport report;
    try {
        report = full_verdict(spec, vopts);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    if (opts.json)
        out << to_json(report, opts.timings).dump(2) << "\n";
    else
        out << to_text(report, opts.timings);

    if (!report.consistent) {
        err << report.consistency_error << "\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// table2
// ---------------------------------------------------------------------------

namespace {

struct GridRow {
    std::string label;
    bool morse{false};
    enum class Dipoles { sqrt_n, uniform, uniform_last2 } dipoles{Dipoles::sqrt_n};
};

const GridRow kGridRows[] = {
    {"morse, d_n = sqrt(n)", true, GridRow::Dipoles::sqrt_n},
    {"morse, d_n = 1", true, GridRow::Dipoles::uniform},
    {"morse, d_n = 1 except d_{N-1} = 2", true, GridRow::Dipoles::uniform_last2},
    {"harmonic, d_n = sqrt(n)", false, GridRow::Dipoles::sqrt_n},
    {"harmonic, d_n = 1", false, GridRow::Dipoles::uniform},
    {"harmonic, d_n = 1 except d_{N-1} = 2", false, GridRow::Dipoles::uniform_last2},
};

SystemSpec grid_spec(const GridRow& row, int n) {
    SystemSpec spec;
    spec.levels = row.morse ? morse_levels(n) : harmonic_levels(n);
    switch (row.dipoles) {
    case GridRow::Dipoles::sqrt_n:
        spec.dipoles = sqrt_ladder_dipoles(n);
        break;
    case GridRow::Dipoles::uniform:
        spec.dipoles = uniform_dipoles(n);
        break;
    case GridRow::Dipoles::uniform_last2:
        spec.dipoles = uniform_dipoles(n);
        spec.dipoles.back() = 2.0;
        break;
    }
    return spec;
}

// Expected closure dimensions. Every family reaches N^2 except the
// harmonic chain with uniform couplings, whose symmetric dipole pattern
// collapses the algebra.
int expected_dimension(const GridRow& row, int n) {
    if (!row.morse && row.dipoles == GridRow::Dipoles::uniform) {
        static const int collapsed[] = {4, 4, 11, 11, 22, 22, 37};  // N = 2..8
        return collapsed[n - 2];
    }
    return n * n;
}

} // namespace

int cmd_table2(const Table2Options& opts, std::ostream& out, std::ostream& err) {
    if (opts.max_n < 2 || opts.max_n > 8) {
        err << "table2: --max-n must lie in 2..8 (expected values exist only for that range)\n";
        return kExitInput;
    }
    std::vector<std::string> mismatches;
    std::ostringstream table;
    const int label_width = 36;
    table << std::left << std::setw(label_width) << "closure dimension";
    for (int n = 2; n <= opts.max_n; ++n)
        table << std::right << std::setw(6) << ("N=" + std::to_string(n));
    table << "\n";
    for (const auto& row : kGridRows) {
        table << std::left << std::setw(label_width) << row.label;
        for (int n = 2; n <= opts.max_n; ++n) {
            const SystemSpec spec = grid_spec(row, n);
            const ClosureResult result =
                generate_lie_algebra(control_system_generators(spec), spec.tolerance);
            table << std::right << std::setw(6) << result.dimension;
            const int expected = expected_dimension(row, n);
            if (result.dimension != expected) {
                std::ostringstream os;
                os << "mismatch at row '" << row.label << "', N=" << n << ": got "
                   << result.dimension << ", expected " << expected;
                mismatches.push_back(os.str());
            }
        }
        table << "\n";
    }
    out << table.str();
    if (!mismatches.empty()) {
        for (const auto& m : mismatches)
            err << m << "\n";
        return kExitGoldenMismatch;
    }
    out << "all " << 6 * (opts.max_n - 1) << " entries match the expected grid\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

namespace {

struct SweepPoint {
    std::vector<std::pair<std::string, double>> assignment;  // in parameter order
    SystemSpec spec;
};

// Applies one name=value substitution. `doc` is the raw template (for model
// parameters); `spec` the resolved system (for array patches).
void apply_parameter(nlohmann::json& doc, const std::string& name, double value) {
    if (name == "B") {
        if (!doc.contains("levels") || !doc["levels"].is_object() ||
            doc["levels"].value("model", "") != std::string("morse"))
            throw SpecFileError(
                "sweep: parameter 'B' requires a morse level descriptor in the template");
        doc["levels"]["b"] = value;
        return;
    }
    if (name.size() > 2 && (name[0] == 'd' || name[0] == 'E') && name[1] == '_') {
        return;  // applied after resolution
    }
    throw SpecFileError("sweep: unknown parameter '" + name +
                        "' (supported: d_<k>, E_<k>, B)");
}

int parse_index(const std::string& name) {
    const std::string digits = name.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw SpecFileError("sweep: malformed parameter name '" + name + "'");
    return std::stoi(digits);
}

void apply_resolved(SystemSpec& spec, const std::string& name, double value) {
    if (name == "B")
        return;  // already applied to the template document
    const int idx = parse_index(name);
    if (name[0] == 'd') {
        if (idx < 1 || idx > static_cast<int>(spec.dipoles.size()))
            throw SpecFileError("sweep: parameter '" + name + "' is out of range 1.." +
                                std::to_string(spec.dipoles.size()));
        spec.dipoles[static_cast<std::size_t>(idx - 1)] = value;
    } else {
        if (idx < 1 || idx > static_cast<int>(spec.levels.size()))
            throw SpecFileError("sweep: parameter '" + name + "' is out of range 1.." +
                                std::to_string(spec.levels.size()));
        spec.levels[static_cast<std::size_t>(idx - 1)] = value;
    }
}

} // namespace

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    nlohmann::json template_doc;
    bool file_has_tolerance = false;
    try {
        std::ifstream in(opts.template_path);
        if (!in)
            throw SpecFileError("spec file: cannot open '" + opts.template_path + "'");
        try {
            template_doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw SpecFileError("spec file: " + std::string(e.what()));
        }
        if (!template_doc.is_object())
            throw SpecFileError("spec file: field '(root)': expected a JSON object");
        file_has_tolerance = template_doc.contains("tolerance");
        if (opts.params.empty())
            throw SpecFileError("sweep: at least one --param name=v1,v2,... is required");

        for (const auto& [name, values] : opts.params) {
            (void)values;
            if (name != "B" &&
                !(name.size() > 2 && (name[0] == 'd' || name[0] == 'E') && name[1] == '_'))
                throw SpecFileError("sweep: unknown parameter '" + name +
                                    "' (supported: d_<k>, E_<k>, B)");
            if (name != "B")
                (void)parse_index(name);
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    // Build the Cartesian grid in row-major order (last parameter fastest).
    std::size_t total = opts.params.empty() ? 0 : 1;
    for (const auto& [name, values] : opts.params)
        total *= values.size();
    if (total == 0)
        return kExitOk;  // an empty range yields an empty stream

    std::vector<SweepPoint> points;
    points.reserve(total);
    try {
        for (std::size_t flat = 0; flat < total; ++flat) {
            SweepPoint point;
            std::size_t rest = flat;
            std::vector<double> chosen(opts.params.size());
            for (std::size_t p = opts.params.size(); p-- > 0;) {
                const auto& values = opts.params[p].second;
                chosen[p] = values[rest % values.size()];
                rest /= values.size();
            }
            nlohmann::json doc = template_doc;
            for (std::size_t p = 0; p < opts.params.size(); ++p) {
                point.assignment.emplace_back(opts.params[p].first, chosen[p]);
                apply_parameter(doc, opts.params[p].first, chosen[p]);
            }
            point.spec = spec_from_json(doc);
            for (const auto& [name, value] : point.assignment)
                apply_resolved(point.spec, name, value);
            AnalyzeOptions tol_opts;
            tol_opts.tol_override = opts.tol_override;
            tol_opts.env_tol = opts.env_tol;
            point.spec.tolerance =
                resolve_tolerance(tol_opts, file_has_tolerance, point.spec.tolerance);
            point.spec.validate();
            points.push_back(std::move(point));
        }
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    // Run the grid. Points are independent; results are buffered and printed
    // in grid order regardless of completion order.
    std::vector<std::string> lines(points.size());
    std::vector<std::string> failures(points.size());
    VerdictOptions vopts;
    vopts.with_witnesses = opts.witnesses;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long k = 0; k < static_cast<long long>(points.size()); ++k) {
        const auto& point = points[static_cast<std::size_t>(k)];
        try {
            const VerdictReport report = full_verdict(point.spec, vopts);
            if (opts.json) {
                nlohmann::ordered_json j;
                j["point"] = nlohmann::ordered_json::object();
                for (const auto& [name, value] : point.assignment)
                    j["point"][name] = value;
                j["report"] = to_json(report, false);
                lines[static_cast<std::size_t>(k)] = j.dump();
            } else {
                std::ostringstream os;
                for (const auto& [name, value] : point.assignment)
                    os << name << "=" << format_number(value) << " ";
                os << "-> " << summary_line(report);
                if (!report.consistent)
                    os << "  [" << report.consistency_error << "]";
                lines[static_cast<std::size_t>(k)] = os.str();
            }
            if (!report.consistent)
                failures[static_cast<std::size_t>(k)] = report.consistency_error;
        } catch (const std::exception& e) {
            failures[static_cast<std::size_t>(k)] = e.what();
            lines[static_cast<std::size_t>(k)] = std::string("error: ") + e.what();
        }
    }
    int rc = kExitOk;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        out << lines[k] << "\n";
        if (!failures[k].empty())
            rc = kExitInconsistent;
    }
    return rc;
}

} // namespace ctrlcheck
