// specfile.hpp — JSON system-description files: explicit arrays or model
// descriptors for levels and dipoles, resolved into a SystemSpec.
//
// Format (all keys lowercase; see README for the full contract):
//   levels:  [0.5, 1.5, ...]
//         or {"model": "harmonic",   "n": 4}
//         or {"model": "morse",      "n": 4, "b": 0.0419}
//         or {"model": "degenerate", "n": 4, "e1": 0.0, "e2": 1.0,
//             "mode": "first-distinct" | "last-distinct"}
//   dipoles: [1.0, 1.0, ...]
//         or {"model": "sqrt_n" | "uniform" | "custom",
//             "value":  <uniform value, default 1.0>,
//             "values": [...],        (required for "custom")
//             "overrides": {"3": 2.0}} (1-based index -> value)
//   tolerance: optional positive real (default 1e-10)
//   label:     optional text
#pragma once

#include "ctrlcheck/models.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ctrlcheck {

// Parse failure with the offending field or location in the message.
class SpecFileError : public std::runtime_error {
public:
    explicit SpecFileError(const std::string& what) : std::runtime_error(what) {}
};

// Resolve a parsed JSON document into a validated SystemSpec.
SystemSpec spec_from_json(const nlohmann::json& doc);

// Load and resolve a spec file from disk. Throws SpecFileError with a
// line/field-precise message on any failure.
SystemSpec load_spec_file(const std::string& path);

// Serialize the resolved spec (levels and dipoles always as explicit
// arrays) — the "spec echo" embedded in reports.
nlohmann::ordered_json spec_to_json(const SystemSpec& spec);

} // namespace ctrlcheck
