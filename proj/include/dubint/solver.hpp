#pragma once

// Shortest-intercept solver. The pursuer follows one turning arc (left or
// right) then a straight line; the target runs straight at constant speed;
// both must arrive at the same point at the same instant. Fixing the branch
// and the turn angle phi makes the meeting point linear in the two straight
// legs, so each branch reduces to a scalar root-find on the travel-time
// mismatch over phi in [0, 2*pi]. Both branches are searched exhaustively
// and every root is returned, not just one local solution.

#include <array>
#include <optional>
#include <vector>

#include "dubint/geometry.hpp"

namespace dubint {

// The four path-segment lengths of a candidate interception: the pursuer's
// left arc, right arc and straight line, plus the distance the target covers
// before being caught. At most one arc is nonzero in solver output.
struct SegmentLengths {
    double left_arc = 0.0;
    double right_arc = 0.0;
    double straight = 0.0;
    double target_travel = 0.0;

    double total() const { return left_arc + right_arc + straight + target_travel; }
};

// Per-segment travel times: arcs and straight at pursuer speed, target leg
// at target speed.
struct SegmentDurations {
    double left_arc = 0.0;
    double right_arc = 0.0;
    double straight = 0.0;
    double target_travel = 0.0;
};

struct InterceptSolution {
    TurnDirection branch = TurnDirection::Left;
    SegmentLengths lengths;
    SegmentDurations durations;
    double total_length = 0.0;  // sum of the four segment lengths
    double total_time = 0.0;    // == durations.target_travel
    Vec2 intercept_point;
    double curvature = 0.0;  // pursuer curvature, kept for control_profile

    // Segment boundary poses: arc runs start_pose -> arc_end_pose, straight
    // runs arc_end_pose -> end_pose.
    Pose start_pose;
    Pose arc_end_pose;
    Pose end_pose;
};

enum class SolveStatus { Optimal, Infeasible };

struct BranchReport {
    TurnDirection branch = TurnDirection::Left;
    std::vector<InterceptSolution> candidates;
    int root_count = 0;
};

struct SolveReport {
    std::optional<InterceptSolution> best;
    std::array<BranchReport, 2> per_branch;  // Left then Right
    SolveStatus status = SolveStatus::Infeasible;
    std::array<double, 3> residuals{};  // model residuals of best, zero if infeasible
};

struct SolveOptions {
    int grid_intervals = 2048;  // phi-scan resolution per branch
};

// Pose reached after turning through angle phi (arc length phi*R) on the
// branch circle. phi must lie in [0, 2*pi].
Pose exit_pose(const Scenario& scenario, TurnDirection branch, double phi);

// Straight-leg lengths (pursuer, target) that make both actors meet, given
// the pursuer's arc exit pose: solves
//   exit + s_p*dir(exit.heading) == target_start + s_t*dir(target.heading).
// Absent when the headings are parallel with a lateral offset (no meeting
// point) or when a leg is negative beyond -1e-9; values in (-1e-9, 0) clamp
// to 0. When the headings are parallel and the offset is along-track the
// system is degenerate and the legs are resolved from the equal-travel-time
// condition instead, which needs the arc length already spent.
struct StraightLegs {
    double pursuer = 0.0;
    double target = 0.0;
};
std::optional<StraightLegs> linear_subsolve(const Scenario& scenario, const Pose& exit,
                                            double arc_length = 0.0);

// Travel-time mismatch at a candidate turn angle, expressed in length units:
//   |V_T| * (arc + straight) - |V_P| * target_travel.
// Zero exactly at an interception. Absent where linear_subsolve is absent.
std::optional<double> timing_residual(const Scenario& scenario, TurnDirection branch,
                                      double phi);

// All interceptions on one branch: scans phi over [0, 2*pi], brackets every
// sign change of timing_residual (skipping absent spans) and bisects each
// bracket to |dphi| <= 1e-12. Empty result = no interception on this branch.
std::vector<InterceptSolution> solve_branch(const Scenario& scenario, TurnDirection branch,
                                            const SolveOptions& options = {});

// Searches both branches and returns the shortest interception; ties within
// 1e-9 prefer Left. Throws std::invalid_argument on an invalid scenario.
SolveReport solve(const Scenario& scenario, const SolveOptions& options = {});

// Residuals of the interception model at an arbitrary candidate, supporting
// a left arc followed by a right arc: two meeting-point components and the
// equal-travel-time coupling. All-zero means the candidate is a valid
// interception.
std::array<double, 3> check_model_constraints(const Scenario& scenario,
                                              const SegmentLengths& lengths);

// Distance from the intercept point to the active turning circle's center,
// minus the radius. Nonnegative (within roundoff) for every valid solution:
// a meeting point strictly inside the turning circle is unreachable. For a
// straight-only solution the Left circle is used by convention and the bound
// is meaningless.
double turning_circle_clearance(const InterceptSolution& solution, const Scenario& scenario);

// Piecewise-constant steering sequence of a solution: +a for the left arc,
// -a for the right arc, 0 for the straight run; zero-length segments are
// dropped and an all-zero path yields {0}. A solution with both arcs nonzero
// signals a solver bug and throws std::logic_error.
std::vector<double> control_profile(const InterceptSolution& solution);

}  // namespace dubint
