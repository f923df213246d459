#pragma once

// Planar kinematics for a constant-speed, curvature-bounded pursuer and a
// straight-running target: pose propagation along circular arcs and straight
// lines, turning-circle geometry, and the angle conventions shared by the
// rest of the library.
//
// Conventions: headings are measured counterclockwise from +x. A Left turn
// has positive heading rate (signed curvature +a), a Right turn negative
// (-a). Headings stay unwrapped during propagation so that composing arcs is
// exact; normalization happens only at I/O boundaries.

#include <cmath>
#include <stdexcept>

namespace dubint {

inline constexpr double kTau = 6.283185307179586476925286766559;  // 2*pi

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

// Unit vector pointing along a heading angle.
inline Vec2 direction(double heading) { return {std::cos(heading), std::sin(heading)}; }

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Vec2 position() const { return {x, y}; }
};

enum class TurnDirection { Left, Right };

// Motion limits of the pursuer. curvature must equal 1/turn_radius; use
// make_pursuer_params so the pair stays consistent.
struct PursuerParams {
    double speed = 0.0;        // |V_P| > 0
    double turn_radius = 0.0;  // R > 0
    double curvature = 0.0;    // a = 1/R
};

inline PursuerParams make_pursuer_params(double speed, double turn_radius) {
    return {speed, turn_radius, 1.0 / turn_radius};
}

// Constant-velocity target: fixed speed along a fixed heading.
struct TargetParams {
    double speed = 0.0;    // |V_T| > 0
    double heading = 0.0;  // course angle, radians
};

// One intercept problem instance. target.heading duplicates
// target_start.heading by construction; validate_scenario enforces it.
struct Scenario {
    Pose pursuer_start;
    PursuerParams pursuer;
    Pose target_start;
    TargetParams target;

    static Scenario make(Pose pursuer_start, double pursuer_speed, double turn_radius,
                         Pose target_start, double target_speed) {
        Scenario s;
        s.pursuer_start = pursuer_start;
        s.pursuer = make_pursuer_params(pursuer_speed, turn_radius);
        s.target_start = target_start;
        s.target = {target_speed, target_start.heading};
        return s;
    }
};

// Throws std::invalid_argument when a scenario violates its invariants
// (non-finite fields, non-positive speeds or radius, inconsistent curvature
// or duplicated target heading).
void validate_scenario(const Scenario& scenario);

// Maps any finite angle into [0, 2*pi).
double normalize_angle(double angle);

// Pose after travelling arc_length along the turning circle given by
// direction and curvature. Exact closed form; a zero-length arc is the
// identity.
Pose propagate_arc(const Pose& start, TurnDirection direction, double arc_length,
                   double curvature);

// Pose after travelling length straight ahead; heading is unchanged.
Pose propagate_straight(const Pose& start, double length);

// Target pose after elapsed time of constant-velocity motion.
Pose target_position(const Pose& target_start, const TargetParams& target, double elapsed);

// Center of the turning circle tangent to the pose on the given side:
// Left = (x - R sin h, y + R cos h), Right = (x + R sin h, y - R cos h).
Vec2 turning_circle_center(const Pose& start, TurnDirection direction, double radius);

}  // namespace dubint
