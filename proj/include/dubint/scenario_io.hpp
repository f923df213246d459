#pragma once

// Scenario (de)serialization. A scenario file is a strict UTF-8 JSON
// document:
//
//   {
//     "pursuer": {"x": 0, "y": 0, "heading": 2.094, "speed": 5, "turn_radius": 1},
//     "target":  {"x": -5, "y": 0, "heading": 1.571, "speed": 1},
//     "solver":  {"grid_size": 2048, "arc_samples": 200, "line_samples": 200}
//   }
//
// "solver" is optional; unknown keys anywhere are rejected. Headings are
// radians unless the caller asks for degree conversion, and are normalized
// to [0, 2*pi) on load.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "dubint/geometry.hpp"

namespace dubint {

struct SolverConfig {
    int grid_size = 2048;
    int arc_samples = 200;
    int line_samples = 200;
};

struct ScenarioDocument {
    Scenario scenario;
    SolverConfig solver;
};

// Raised on malformed input; the message carries line/column positions for
// syntax errors and the offending key or value otherwise.
struct ScenarioParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ScenarioDocument parse_scenario_text(const std::string& text, bool headings_in_degrees = false);
ScenarioDocument load_scenario_file(const std::filesystem::path& path,
                                    bool headings_in_degrees = false);

// Inverse of parse_scenario_text: emits the same schema, always including
// the solver block; parsing the result reproduces the document exactly.
std::string serialize_scenario(const ScenarioDocument& doc);

}  // namespace dubint
