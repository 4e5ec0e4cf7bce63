// report.cpp — text and JSON renderers for verdict reports.

#include "ctrlcheck/report.hpp"

#include <cstdio>
#include <sstream>

namespace ctrlcheck {

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

std::string join_numbers(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            out += ", ";
        out += format_number(xs[k]);
    }
    out += "]";
    return out;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k)
            out += ", ";
        out += std::to_string(xs[k]);
    }
    return out;
}

Conclusion strongest_conclusion(const VerdictReport& r) {
    Conclusion best = Conclusion::inconclusive;
    for (const auto& v : r.analytic) {
        if (v.conclusion == Conclusion::full_u_n)
            return Conclusion::full_u_n;
        if (v.conclusion == Conclusion::at_least_su_n)
            best = Conclusion::at_least_su_n;
    }
    return best;
}

} // namespace

std::string to_text(const VerdictReport& r, bool with_timings) {
    std::ostringstream os;
    if (!r.spec.label.empty())
        os << "system: " << r.spec.label << "\n";
    os << "levels:    " << join_numbers(r.spec.levels) << "\n";
    os << "dipoles:   " << join_numbers(r.spec.dipoles) << "\n";
    os << "tolerance: " << format_number(r.spec.tolerance) << "\n";
    os << "\nnumeric closure:\n";
    os << "  dimension:             " << r.numeric.dimension << " (N^2 = " << r.numeric.n_squared
       << ")\n";
    os << "  classification:        " << to_string(r.numeric.classification) << "\n";
    os << "  trace(H_0) nonzero:    " << (r.numeric.trace_nonzero ? "yes" : "no") << "\n";
    os << "  passes:                " << r.numeric.passes << "\n";
    os << "  commutators evaluated: " << r.numeric.commutators_evaluated << "\n";
    if (with_timings)
        os << "  wall time (ms):        " << format_number(r.numeric.wall_time_ms) << "\n";
    os << "\nanalytic criteria:\n";
    for (const auto& v : r.analytic) {
        os << "  " << to_string(v.theorem_id) << ": hypothesis "
           << (v.hypothesis_holds ? "holds" : "fails");
        if (!v.failing_indices.empty())
            os << " (failing n: " << join_ints(v.failing_indices) << ")";
        os << "; conclusion " << to_string(v.conclusion) << "\n";
        for (const auto& w : v.warnings)
            os << "    warning: " << w << "\n";
    }
    if (!r.witnesses.empty()) {
        os << "\nwitnesses:\n";
        for (const auto& w : r.witnesses)
            os << "  " << to_string(w.theorem_id) << ": target " << w.target << ", coefficient "
               << format_number(w.coefficient) << ", relative residual "
               << format_number(w.relative_residual) << "\n";
    }
    if (!r.warnings.empty()) {
        os << "\nwarnings:\n";
        for (const auto& w : r.warnings)
            os << "  " << w << "\n";
    }
    os << "\nconsistency: " << (r.consistent ? "ok" : r.consistency_error) << "\n";
    return os.str();
}

nlohmann::ordered_json to_json(const VerdictReport& r, bool with_timings) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json spec;
    spec["levels"] = r.spec.levels;
    spec["dipoles"] = r.spec.dipoles;
    spec["tolerance"] = r.spec.tolerance;
    if (!r.spec.label.empty())
        spec["label"] = r.spec.label;
    j["spec"] = spec;

    nlohmann::ordered_json numeric;
    numeric["dimension"] = r.numeric.dimension;
    numeric["n_squared"] = r.numeric.n_squared;
    numeric["classification"] = to_string(r.numeric.classification);
    numeric["trace_nonzero"] = r.numeric.trace_nonzero;
    numeric["passes"] = r.numeric.passes;
    numeric["commutators_evaluated"] = r.numeric.commutators_evaluated;
    if (with_timings)
        numeric["wall_time_ms"] = r.numeric.wall_time_ms;
    j["numeric"] = numeric;

    j["analytic"] = nlohmann::ordered_json::array();
    for (const auto& v : r.analytic) {
        nlohmann::ordered_json a;
        a["theorem_id"] = to_string(v.theorem_id);
        a["hypothesis_holds"] = v.hypothesis_holds;
        a["trace_nonzero"] = v.trace_nonzero;
        a["conclusion"] = to_string(v.conclusion);
        a["failing_indices"] = v.failing_indices;
        a["warnings"] = v.warnings;
        j["analytic"].push_back(a);
    }

    j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::ordered_json x;
        x["theorem_id"] = to_string(w.theorem_id);
        x["target"] = w.target;
        x["coefficient"] = w.coefficient;
        x["relative_residual"] = w.relative_residual;
        j["witnesses"].push_back(x);
    }

    j["warnings"] = r.warnings;
    j["consistent"] = r.consistent;
    if (!r.consistent)
        j["consistency_error"] = r.consistency_error;
    return j;
}

std::string summary_line(const VerdictReport& r) {
    std::ostringstream os;
    os << "dimension " << r.numeric.dimension << "/" << r.numeric.n_squared << "  "
       << to_string(r.numeric.classification) << "  analytic "
       << to_string(strongest_conclusion(r));
    return os.str();
}

} // namespace ctrlcheck
