#pragma once

// Deterministic trajectory export: CSV for scripts and a static SVG plot for
// humans. Identical inputs always produce byte-identical output (numbers are
// formatted with fixed printf specifiers and nothing run-dependent is
// embedded).

#include <string>

#include "dubint/geometry.hpp"
#include "dubint/solver.hpp"
#include "dubint/trajectory.hpp"

namespace dubint {

// CSV with header "actor,time,x,y"; pursuer rows then target rows, each in
// time order, numbers at 9 significant digits.
std::string render_csv(const Trajectory& trajectory);

// Static SVG plot: both turning circles, pursuer and target paths, start
// markers and the intercept point, auto-fit viewBox with a 10% margin.
// Geometry is emitted in world coordinates inside a y-flipping group so
// circle elements keep their true center/radius.
std::string render_svg(const Scenario& scenario, const InterceptSolution& solution,
                       const Trajectory& trajectory);

// Writes content to path; returns false when the file cannot be (fully)
// written.
bool write_text_file(const std::string& content, const std::string& path);

}  // namespace dubint
