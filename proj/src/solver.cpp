#include "dubint/solver.hpp"

#include <algorithm>
#include <cmath>

namespace dubint {

namespace {

// Magnitude scale for timing residuals of a scenario: residuals are speed
// times length, so poles are rejected relative to |V_P|*(R + start offset).
double residual_scale(const Scenario& s) {
    const double d = distance(s.pursuer_start.position(), s.target_start.position());
    return std::max(1.0, s.pursuer.speed * (s.pursuer.turn_radius + d));
}

InterceptSolution make_solution(const Scenario& s, TurnDirection branch, double phi) {
    const double radius = s.pursuer.turn_radius;
    const double arc_length = phi * radius;
    const Pose exit = exit_pose(s, branch, phi);
    const auto legs = linear_subsolve(s, exit, arc_length);
    if (!legs) throw std::logic_error("make_solution: root without straight legs");

    InterceptSolution sol;
    sol.branch = branch;
    sol.curvature = s.pursuer.curvature;
    if (branch == TurnDirection::Left)
        sol.lengths = {arc_length, 0.0, legs->pursuer, legs->target};
    else
        sol.lengths = {0.0, arc_length, legs->pursuer, legs->target};
    sol.durations = {sol.lengths.left_arc / s.pursuer.speed,
                     sol.lengths.right_arc / s.pursuer.speed,
                     sol.lengths.straight / s.pursuer.speed,
                     sol.lengths.target_travel / s.target.speed};
    sol.total_length = sol.lengths.total();
    sol.total_time = sol.durations.target_travel;
    sol.start_pose = s.pursuer_start;
    sol.arc_end_pose = exit;
    sol.end_pose = propagate_straight(exit, legs->pursuer);
    sol.intercept_point = sol.end_pose.position();
    return sol;
}

}  // namespace

Pose exit_pose(const Scenario& scenario, TurnDirection branch, double phi) {
    if (!(phi >= 0.0 && phi <= kTau))
        throw std::invalid_argument("exit_pose: turn angle outside [0, 2*pi]");
    return propagate_arc(scenario.pursuer_start, branch, phi * scenario.pursuer.turn_radius,
                         scenario.pursuer.curvature);
}

std::optional<StraightLegs> linear_subsolve(const Scenario& scenario, const Pose& exit,
                                            double arc_length) {
    if (!std::isfinite(exit.heading))
        throw std::invalid_argument("linear_subsolve: non-finite exit heading");

    const double heading = exit.heading;
    const double course = scenario.target.heading;
    const double dx = scenario.target_start.x - exit.x;
    const double dy = scenario.target_start.y - exit.y;

    double pursuer_leg = 0.0;
    double target_leg = 0.0;
    const double det = std::sin(heading - course);
    if (std::abs(det) < 1e-10) {
        // Parallel rays. With a lateral offset there is no meeting point; on
        // a common track the position equations are degenerate and the legs
        // follow from equal travel time instead.
        const double scale = std::max({1.0, std::abs(dx), std::abs(dy)});
        const double lateral = std::cos(heading) * dy - std::sin(heading) * dx;
        if (std::abs(lateral) > 1e-9 * scale) return std::nullopt;
        const double along = std::cos(heading) * dx + std::sin(heading) * dy;
        const double sigma = std::cos(heading - course) > 0.0 ? 1.0 : -1.0;
        const double closing = scenario.pursuer.speed - sigma * scenario.target.speed;
        if (std::abs(closing) < 1e-12 * (scenario.pursuer.speed + scenario.target.speed))
            return std::nullopt;  // same-direction chase at equal speed never closes
        target_leg = scenario.target.speed * (arc_length + along) / closing;
        pursuer_leg = along + sigma * target_leg;
    } else {
        // Cramer's rule on: leg_p*dir(heading) - leg_t*dir(course) = (dx, dy).
        pursuer_leg = (-dx * std::sin(course) + dy * std::cos(course)) / det;
        target_leg = (dy * std::cos(heading) - dx * std::sin(heading)) / det;
    }

    if (pursuer_leg < 0.0) {
        if (pursuer_leg < -1e-9) return std::nullopt;
        pursuer_leg = 0.0;
    }
    if (target_leg < 0.0) {
        if (target_leg < -1e-9) return std::nullopt;
        target_leg = 0.0;
    }
    return StraightLegs{pursuer_leg, target_leg};
}

std::optional<double> timing_residual(const Scenario& scenario, TurnDirection branch,
                                      double phi) {
    const double arc_length = phi * scenario.pursuer.turn_radius;
    const auto legs = linear_subsolve(scenario, exit_pose(scenario, branch, phi), arc_length);
    if (!legs) return std::nullopt;
    return scenario.target.speed * (arc_length + legs->pursuer) -
           scenario.pursuer.speed * legs->target;
}

std::vector<InterceptSolution> solve_branch(const Scenario& scenario, TurnDirection branch,
                                            const SolveOptions& options) {
    const int n = std::max(2, options.grid_intervals);
    const double scale = residual_scale(scenario);
    const double zero_tol = 1e-12 * scale;  // grid value already at a root
    const double pole_tol = 1e-6 * scale;   // converged bracket that is a pole, not a root

    std::vector<double> phis(n + 1);
    std::vector<std::optional<double>> g(n + 1);
    for (int i = 0; i <= n; ++i) {
        phis[i] = kTau * i / n;
        g[i] = timing_residual(scenario, branch, phis[i]);
    }

    std::vector<double> roots;
    for (int i = 0; i <= n; ++i)
        if (g[i] && std::abs(*g[i]) <= zero_tol) roots.push_back(phis[i]);

    // Bisects [lo, hi] (residuals glo/ghi of opposite sign, both defined) down
    // to the phi tolerance and records the root unless it turns out to be a
    // pole or the bracket straddles an undefined span.
    const auto refine_bracket = [&](double lo, double hi, double glo, double ghi) {
        if (std::abs(glo) <= zero_tol || std::abs(ghi) <= zero_tol) {
            // Endpoint already a root; grid endpoints were collected above and
            // definedness-boundary endpoints are recorded here.
            if (std::abs(glo) <= zero_tol) roots.push_back(lo);
            if (std::abs(ghi) <= zero_tol) roots.push_back(hi);
            return;
        }
        if ((glo < 0.0) == (ghi < 0.0)) return;
        for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const auto gm = timing_residual(scenario, branch, mid);
            if (!gm) return;  // bracket straddles an undefined span
            if ((*gm < 0.0) == (glo < 0.0)) {
                lo = mid;
                glo = *gm;
            } else {
                hi = mid;
            }
        }
        const double root = 0.5 * (lo + hi);
        const auto gr = timing_residual(scenario, branch, root);
        if (!gr || std::abs(*gr) > pole_tol) return;  // sign flip through a pole
        roots.push_back(root);
    };

    for (int i = 0; i < n; ++i) {
        const bool defined_lo = g[i].has_value();
        const bool defined_hi = g[i + 1].has_value();
        if (defined_lo && defined_hi) {
            refine_bracket(phis[i], phis[i + 1], *g[i], *g[i + 1]);
        } else if (defined_lo != defined_hi) {
            // The residual's domain ends inside this cell (a leg-sign cutoff
            // or a parallel-heading pole). Roots can hide between the defined
            // grid point and that boundary, in a sliver narrower than a cell,
            // so locate the boundary by bisecting on definedness and bracket
            // against it.
            double in = defined_lo ? phis[i] : phis[i + 1];
            double out = defined_lo ? phis[i + 1] : phis[i];
            double g_in = defined_lo ? *g[i] : *g[i + 1];
            for (int iter = 0; iter < 60; ++iter) {
                const double mid = 0.5 * (in + out);
                if (const auto gm = timing_residual(scenario, branch, mid)) {
                    in = mid;
                    g_in = *gm;
                } else {
                    out = mid;
                }
            }
            if (defined_lo)
                refine_bracket(phis[i], in, *g[i], g_in);
            else
                refine_bracket(in, phis[i + 1], g_in, *g[i + 1]);
        }
        // Both endpoints undefined: no root is sought inside absent spans.
    }

    std::sort(roots.begin(), roots.end());
    std::vector<InterceptSolution> out;
    double previous = -1.0;
    for (double root : roots) {
        if (!out.empty() && root - previous < 1e-9) continue;  // duplicate root
        out.push_back(make_solution(scenario, branch, root));
        previous = root;
    }
    return out;
}

SolveReport solve(const Scenario& scenario, const SolveOptions& options) {
    validate_scenario(scenario);

    SolveReport report;
    report.per_branch[0].branch = TurnDirection::Left;
    report.per_branch[0].candidates = solve_branch(scenario, TurnDirection::Left, options);
    report.per_branch[1].branch = TurnDirection::Right;
    report.per_branch[1].candidates = solve_branch(scenario, TurnDirection::Right, options);
    for (auto& branch : report.per_branch)
        branch.root_count = static_cast<int>(branch.candidates.size());

    // Left candidates are scanned first, and a later candidate must win by
    // more than 1e-9, so exact ties resolve to the Left branch.
    for (const auto& branch : report.per_branch)
        for (const auto& candidate : branch.candidates)
            if (!report.best || candidate.total_length < report.best->total_length - 1e-9)
                report.best = candidate;

    report.status = report.best ? SolveStatus::Optimal : SolveStatus::Infeasible;
    if (report.best) report.residuals = check_model_constraints(scenario, report.best->lengths);
    return report;
}

std::array<double, 3> check_model_constraints(const Scenario& scenario,
                                              const SegmentLengths& lengths) {
    if (lengths.left_arc < 0.0 || lengths.right_arc < 0.0 || lengths.straight < 0.0 ||
        lengths.target_travel < 0.0)
        throw std::invalid_argument("check_model_constraints: negative segment length");

    const double a = scenario.pursuer.curvature;
    const double h0 = scenario.pursuer_start.heading;
    const double h1 = h0 + a * lengths.left_arc;   // heading after the left arc
    const double h2 = h1 - a * lengths.right_arc;  // heading after the right arc
    const double course = scenario.target.heading;

    const double rx = scenario.pursuer_start.x - scenario.target_start.x +
                      (-std::sin(h0) + 2.0 * std::sin(h1) - std::sin(h2)) / a +
                      lengths.straight * std::cos(h2) - lengths.target_travel * std::cos(course);
    const double ry = scenario.pursuer_start.y - scenario.target_start.y +
                      (std::cos(h0) - 2.0 * std::cos(h1) + std::cos(h2)) / a +
                      lengths.straight * std::sin(h2) - lengths.target_travel * std::sin(course);
    const double rt =
        scenario.target.speed * (lengths.left_arc + lengths.right_arc + lengths.straight) -
        scenario.pursuer.speed * lengths.target_travel;
    return {rx, ry, rt};
}

double turning_circle_clearance(const InterceptSolution& solution, const Scenario& scenario) {
    TurnDirection active = TurnDirection::Left;  // straight-only: Left by convention
    if (solution.lengths.right_arc > 0.0) active = TurnDirection::Right;
    const Vec2 center =
        turning_circle_center(scenario.pursuer_start, active, scenario.pursuer.turn_radius);
    return distance(solution.intercept_point, center) - scenario.pursuer.turn_radius;
}

std::vector<double> control_profile(const InterceptSolution& solution) {
    if (solution.lengths.left_arc > 0.0 && solution.lengths.right_arc > 0.0)
        throw std::logic_error("control_profile: both arcs nonzero in a solver solution");
    std::vector<double> profile;
    if (solution.lengths.left_arc > 0.0) profile.push_back(solution.curvature);
    if (solution.lengths.right_arc > 0.0) profile.push_back(-solution.curvature);
    if (solution.lengths.straight > 0.0) profile.push_back(0.0);
    if (profile.empty()) profile.push_back(0.0);  // degenerate zero-length path
    return profile;
}

}  // namespace dubint
