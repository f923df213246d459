#include "dubint/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace dubint {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr double kDegree = kTau / 360.0;

[[noreturn]] void fail(const std::string& message) { throw ScenarioParseError(message); }

// nlohmann reports syntax errors by byte offset; turn that into line/column.
[[noreturn]] void fail_at_offset(const std::string& text, std::size_t byte,
                                 const std::string& what) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream out;
    out << "scenario parse error at line " << line << ", column " << column << ": " << what;
    fail(out.str());
}

void reject_unknown_keys(const json& object, const char* section,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) known = true;
        if (!known) fail("scenario: unknown key \"" + item.key() + "\" in " + section);
    }
}

const json& require_section(const json& root, const char* name) {
    auto it = root.find(name);
    if (it == root.end()) fail(std::string("scenario: missing \"") + name + "\" section");
    if (!it->is_object()) fail(std::string("scenario: \"") + name + "\" must be an object");
    return *it;
}

double require_number(const json& section, const char* section_name, const char* key) {
    auto it = section.find(key);
    if (it == section.end())
        fail(std::string("scenario: missing ") + section_name + "." + key);
    if (!it->is_number())
        fail(std::string("scenario: ") + section_name + "." + key + " must be a number");
    const double value = it->get<double>();
    if (!std::isfinite(value))
        fail(std::string("scenario: ") + section_name + "." + key + " must be finite");
    return value;
}

int require_count(const json& section, const char* key, int minimum, int fallback) {
    auto it = section.find(key);
    if (it == section.end()) return fallback;
    if (!it->is_number_integer())
        fail(std::string("scenario: solver.") + key + " must be an integer");
    const auto value = it->get<long long>();
    if (value < minimum)
        fail(std::string("scenario: solver.") + key + " must be >= " +
             std::to_string(minimum));
    return static_cast<int>(value);
}

}  // namespace

ScenarioDocument parse_scenario_text(const std::string& text, bool headings_in_degrees) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at_offset(text, e.byte, e.what());
    }
    if (!root.is_object()) fail("scenario: top level must be an object");
    reject_unknown_keys(root, "scenario", {"pursuer", "target", "solver"});

    const json& pursuer = require_section(root, "pursuer");
    reject_unknown_keys(pursuer, "pursuer", {"x", "y", "heading", "speed", "turn_radius"});
    const json& target = require_section(root, "target");
    reject_unknown_keys(target, "target", {"x", "y", "heading", "speed"});

    const double angle_unit = headings_in_degrees ? kDegree : 1.0;
    Pose pursuer_start{require_number(pursuer, "pursuer", "x"),
                       require_number(pursuer, "pursuer", "y"),
                       normalize_angle(require_number(pursuer, "pursuer", "heading") *
                                       angle_unit)};
    Pose target_start{require_number(target, "target", "x"),
                      require_number(target, "target", "y"),
                      normalize_angle(require_number(target, "target", "heading") *
                                      angle_unit)};

    ScenarioDocument doc;
    doc.scenario = Scenario::make(pursuer_start, require_number(pursuer, "pursuer", "speed"),
                                  require_number(pursuer, "pursuer", "turn_radius"),
                                  target_start, require_number(target, "target", "speed"));

    if (auto it = root.find("solver"); it != root.end()) {
        if (!it->is_object()) fail("scenario: \"solver\" must be an object");
        reject_unknown_keys(*it, "solver", {"grid_size", "arc_samples", "line_samples"});
        doc.solver.grid_size = require_count(*it, "grid_size", 2, doc.solver.grid_size);
        doc.solver.arc_samples = require_count(*it, "arc_samples", 2, doc.solver.arc_samples);
        doc.solver.line_samples = require_count(*it, "line_samples", 2, doc.solver.line_samples);
    }

    try {
        validate_scenario(doc.scenario);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return doc;
}

ScenarioDocument load_scenario_file(const std::filesystem::path& path,
                                    bool headings_in_degrees) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open scenario file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), headings_in_degrees);
}

std::string serialize_scenario(const ScenarioDocument& doc) {
    ordered_json root;
    root["pursuer"] = {{"x", doc.scenario.pursuer_start.x},
                       {"y", doc.scenario.pursuer_start.y},
                       {"heading", doc.scenario.pursuer_start.heading},
                       {"speed", doc.scenario.pursuer.speed},
                       {"turn_radius", doc.scenario.pursuer.turn_radius}};
    root["target"] = {{"x", doc.scenario.target_start.x},
                      {"y", doc.scenario.target_start.y},
                      {"heading", doc.scenario.target_start.heading},
                      {"speed", doc.scenario.target.speed}};
    root["solver"] = {{"grid_size", doc.solver.grid_size},
                      {"arc_samples", doc.solver.arc_samples},
                      {"line_samples", doc.solver.line_samples}};
    return root.dump(2) + "\n";
}

}  // namespace dubint
