// specfile.cpp — implementation of spec-file parsing and resolution.

#include "ctrlcheck/specfile.hpp"

#include <fstream>
#include <sstream>

namespace ctrlcheck {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw SpecFileError("spec file: field '" + field + "': " + message);
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number())
        fail(field, "expected a number");
    return j.get<double>();
}

int int_at(const json& j, const std::string& field) {
    if (!j.is_number_integer())
        fail(field, "expected an integer");
    return j.get<int>();
}

std::vector<double> array_at(const json& j, const std::string& field) {
    if (!j.is_array())
        fail(field, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
        out.push_back(number_at(j[k], field + "[" + std::to_string(k) + "]"));
    return out;
}

void reject_unknown_keys(const json& j, const std::string& field,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* key : allowed)
            if (item.key() == key)
                ok = true;
        if (!ok)
            fail(field + "." + item.key(), "unknown key");
    }
}

std::vector<double> resolve_levels(const json& j) {
    if (j.is_array())
        return array_at(j, "levels");
    if (!j.is_object())
        fail("levels", "expected an array or a model descriptor object");
    if (!j.contains("model"))
        fail("levels.model", "missing");
    const std::string model = j["model"].is_string() ? j["model"].get<std::string>() : "";
    if (model == "harmonic") {
        reject_unknown_keys(j, "levels", {"model", "n"});
        if (!j.contains("n"))
            fail("levels.n", "missing");
        return harmonic_levels(int_at(j["n"], "levels.n"));
    }
    if (model == "morse") {
        reject_unknown_keys(j, "levels", {"model", "n", "b"});
        if (!j.contains("n"))
            fail("levels.n", "missing");
        const double b = j.contains("b") ? number_at(j["b"], "levels.b") : kMorseB;
        if (!(b > 0.0))
            fail("levels.b", "anharmonicity must be positive");
        return morse_levels(int_at(j["n"], "levels.n"), b);
    }
    if (model == "degenerate") {
        reject_unknown_keys(j, "levels", {"model", "n", "e1", "e2", "mode"});
        for (const char* key : {"n", "e1", "e2", "mode"})
            if (!j.contains(key))
                fail(std::string("levels.") + key, "missing");
        const std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
        DegeneratePattern pattern;
        if (mode == "first-distinct")
            pattern = DegeneratePattern::first_distinct;
        else if (mode == "last-distinct")
            pattern = DegeneratePattern::last_distinct;
        else
            fail("levels.mode", "expected \"first-distinct\" or \"last-distinct\"");
        return degenerate_levels(int_at(j["n"], "levels.n"), number_at(j["e1"], "levels.e1"),
                                 number_at(j["e2"], "levels.e2"), pattern);
    }
    fail("levels.model", "unknown model '" + model + "'");
}

std::vector<double> resolve_dipoles(const json& j, int n) {
    std::vector<double> d;
    if (j.is_array()) {
        d = array_at(j, "dipoles");
    } else if (j.is_object()) {
        if (!j.contains("model"))
            fail("dipoles.model", "missing");
        const std::string model = j["model"].is_string() ? j["model"].get<std::string>() : "";
        if (model == "sqrt_n") {
            reject_unknown_keys(j, "dipoles", {"model", "overrides"});
            d = sqrt_ladder_dipoles(n);
        } else if (model == "uniform") {
            reject_unknown_keys(j, "dipoles", {"model", "value", "overrides"});
            const double value = j.contains("value") ? number_at(j["value"], "dipoles.value") : 1.0;
            d = uniform_dipoles(n, value);
        } else if (model == "custom") {
            reject_unknown_keys(j, "dipoles", {"model", "values", "overrides"});
            if (!j.contains("values"))
                fail("dipoles.values", "missing (required for the custom model)");
            d = array_at(j["values"], "dipoles.values");
        } else {
            fail("dipoles.model", "unknown model '" + model + "'");
        }
        if (j.contains("overrides")) {
            const json& ov = j["overrides"];
            if (!ov.is_object())
                fail("dipoles.overrides", "expected an object mapping 1-based index to value");
            for (const auto& item : ov.items()) {
                int idx = 0;
                try {
                    std::size_t pos = 0;
                    idx = std::stoi(item.key(), &pos);
                    if (pos != item.key().size())
                        idx = 0;
                } catch (const std::exception&) {
                    idx = 0;
                }
                if (idx < 1 || idx > static_cast<int>(d.size()))
                    fail("dipoles.overrides." + item.key(),
                         "index out of range 1.." + std::to_string(d.size()));
                d[static_cast<std::size_t>(idx - 1)] =
                    number_at(item.value(), "dipoles.overrides." + item.key());
            }
        }
    } else {
        fail("dipoles", "expected an array or a model descriptor object");
    }
    if (static_cast<int>(d.size()) != n - 1)
        fail("dipoles", "expected " + std::to_string(n - 1) + " couplings for " +
                            std::to_string(n) + " levels, got " + std::to_string(d.size()));
    return d;
}

} // namespace

SystemSpec spec_from_json(const json& doc) {
    if (!doc.is_object())
        fail("(root)", "expected a JSON object");
    reject_unknown_keys(doc, "(root)", {"levels", "dipoles", "tolerance", "label"});
    if (!doc.contains("levels"))
        fail("levels", "missing");
    if (!doc.contains("dipoles"))
        fail("dipoles", "missing");

    SystemSpec spec;
    spec.levels = resolve_levels(doc["levels"]);
    spec.dipoles = resolve_dipoles(doc["dipoles"], static_cast<int>(spec.levels.size()));
    if (doc.contains("tolerance")) {
        spec.tolerance = number_at(doc["tolerance"], "tolerance");
        if (!(spec.tolerance > 0.0))
            fail("tolerance", "must be positive");
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string())
            fail("label", "expected a string");
        spec.label = doc["label"].get<std::string>();
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw SpecFileError(std::string("spec file: ") + e.what());
    }
    return spec;
}

SystemSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SpecFileError("spec file: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecFileError("spec file: " + std::string(e.what()));
    }
    return spec_from_json(doc);
}

nlohmann::ordered_json spec_to_json(const SystemSpec& spec) {
    nlohmann::ordered_json j;
    j["levels"] = spec.levels;
    j["dipoles"] = spec.dipoles;
    j["tolerance"] = spec.tolerance;
    if (!spec.label.empty())
        j["label"] = spec.label;
    return j;
}

} // namespace ctrlcheck
