#include "dubint/geometry.hpp"

namespace dubint {

namespace {

bool finite(double v) { return std::isfinite(v); }

bool finite(const Pose& p) { return finite(p.x) && finite(p.y) && finite(p.heading); }

}  // namespace

void validate_scenario(const Scenario& scenario) {
    if (!finite(scenario.pursuer_start) || !finite(scenario.target_start))
        throw std::invalid_argument("scenario: non-finite pose");
    if (!finite(scenario.pursuer.speed) || !finite(scenario.pursuer.turn_radius) ||
        !finite(scenario.pursuer.curvature) || !finite(scenario.target.speed) ||
        !finite(scenario.target.heading))
        throw std::invalid_argument("scenario: non-finite parameter");
    if (scenario.pursuer.speed <= 0.0)
        throw std::invalid_argument("scenario: pursuer speed must be > 0");
    if (scenario.target.speed <= 0.0)
        throw std::invalid_argument("scenario: target speed must be > 0");
    if (scenario.pursuer.turn_radius <= 0.0)
        throw std::invalid_argument("scenario: turn radius must be > 0");
    if (scenario.pursuer.curvature != 1.0 / scenario.pursuer.turn_radius)
        throw std::invalid_argument("scenario: curvature inconsistent with turn radius");
    if (scenario.target.heading != scenario.target_start.heading)
        throw std::invalid_argument("scenario: target heading fields disagree");
}

double normalize_angle(double angle) {
    if (!finite(angle)) throw std::invalid_argument("normalize_angle: non-finite angle");
    double r = std::fmod(angle, kTau);
    if (r < 0.0) r += kTau;
    if (r == kTau) r = 0.0;  // fmod can round a tiny negative up to 2*pi
    return r;
}

Pose propagate_arc(const Pose& start, TurnDirection direction, double arc_length,
                   double curvature) {
    if (!finite(start) || !finite(arc_length) || !finite(curvature))
        throw std::invalid_argument("propagate_arc: non-finite input");
    if (arc_length < 0.0) throw std::invalid_argument("propagate_arc: negative arc length");
    if (curvature <= 0.0) throw std::invalid_argument("propagate_arc: curvature must be > 0");

    // Signed curvature: heading rate is +a on a left turn, -a on a right turn.
    const double u = direction == TurnDirection::Left ? curvature : -curvature;
    const double h0 = start.heading;
    const double h1 = h0 + u * arc_length;
    return {start.x + (std::sin(h1) - std::sin(h0)) / u,
            start.y - (std::cos(h1) - std::cos(h0)) / u, h1};
}

Pose propagate_straight(const Pose& start, double length) {
    if (!finite(start) || !finite(length))
        throw std::invalid_argument("propagate_straight: non-finite input");
    if (length < 0.0) throw std::invalid_argument("propagate_straight: negative length");
    return {start.x + length * std::cos(start.heading),
            start.y + length * std::sin(start.heading), start.heading};
}

Pose target_position(const Pose& target_start, const TargetParams& target, double elapsed) {
    if (!finite(target_start) || !finite(target.speed) || !finite(target.heading) ||
        !finite(elapsed))
        throw std::invalid_argument("target_position: non-finite input");
    if (elapsed < 0.0) throw std::invalid_argument("target_position: negative elapsed time");
    const double travelled = target.speed * elapsed;
    return {target_start.x + travelled * std::cos(target.heading),
            target_start.y + travelled * std::sin(target.heading), target.heading};
}

Vec2 turning_circle_center(const Pose& start, TurnDirection direction, double radius) {
    if (!finite(start) || !finite(radius))
        throw std::invalid_argument("turning_circle_center: non-finite input");
    if (radius <= 0.0) throw std::invalid_argument("turning_circle_center: radius must be > 0");
    const double sign = direction == TurnDirection::Left ? 1.0 : -1.0;
    return {start.x - sign * radius * std::sin(start.heading),
            start.y + sign * radius * std::cos(start.heading)};
}

}  // namespace dubint
