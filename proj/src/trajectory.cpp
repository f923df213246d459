#include "dubint/trajectory.hpp"

#include <cmath>

namespace dubint {

Trajectory sample(const InterceptSolution& solution, const Scenario& scenario,
                  int arc_samples, int line_samples) {
    if (arc_samples < 2 || line_samples < 2)
        throw std::invalid_argument("sample: need at least 2 samples per segment");

    Trajectory traj;
    const SegmentLengths& len = solution.lengths;
    const double arc_length = len.left_arc + len.right_arc;  // at most one is nonzero

    // Pursuer: start, arc subdivisions, straight subdivisions.
    traj.pursuer_samples.push_back({0.0, solution.start_pose.position()});
    const double arc_time = solution.durations.left_arc + solution.durations.right_arc;
    if (arc_length > 0.0) {
        const double u = len.left_arc > 0.0 ? solution.curvature : -solution.curvature;
        const Pose& p0 = solution.start_pose;
        double heading = p0.heading;
        const double step = u * arc_length / arc_samples;
        for (int i = 1; i <= arc_samples; ++i) {
            heading += step;
            traj.pursuer_samples.push_back(
                {arc_time * i / arc_samples,
                 {p0.x + (std::sin(heading) - std::sin(p0.heading)) / u,
                  p0.y - (std::cos(heading) - std::cos(p0.heading)) / u}});
        }
    }
    if (len.straight > 0.0) {
        const Pose& exit = solution.arc_end_pose;
        const Vec2 along = direction(exit.heading);
        for (int j = 1; j <= line_samples; ++j) {
            const double dist = len.straight * j / line_samples;
            traj.pursuer_samples.push_back(
                {arc_time + solution.durations.straight * j / line_samples,
                 exit.position() + dist * along});
        }
    }

    // Target: uniform time subdivision of its straight run.
    traj.target_samples.push_back({0.0, scenario.target_start.position()});
    if (len.target_travel > 0.0) {
        const Vec2 along = direction(scenario.target.heading);
        for (int j = 1; j <= line_samples; ++j) {
            const double t = solution.total_time * j / line_samples;
            traj.target_samples.push_back(
                {t, scenario.target_start.position() + scenario.target.speed * t * along});
        }
    }

    traj.intercept = {solution.total_time, solution.intercept_point};
    return traj;
}

}  // namespace dubint
