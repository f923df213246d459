#pragma once

// Time-stamped polyline sampling of an intercept solution: the pursuer's
// arc + straight path and the target's straight run, for CSV export and
// plotting. Arc samples advance the heading by a fixed increment and place
// each point with the closed-form circle equation, so they stay on the
// turning circle to roundoff.

#include <vector>

#include "dubint/geometry.hpp"
#include "dubint/solver.hpp"

namespace dubint {

struct TimedPoint {
    double time = 0.0;
    Vec2 point;
};

struct Trajectory {
    std::vector<TimedPoint> pursuer_samples;
    std::vector<TimedPoint> target_samples;
    TimedPoint intercept;
};

// Samples a solution with arc_samples subdivisions on the turning arc and
// line_samples on each straight run. Both counts must be >= 2. Zero-length
// segments contribute only their start point, so sample times are strictly
// increasing from 0 to the interception time.
Trajectory sample(const InterceptSolution& solution, const Scenario& scenario,
                  int arc_samples, int line_samples);

}  // namespace dubint
