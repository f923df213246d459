#include "dubint/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dubint {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void append_rows(std::ostringstream& out, const char* actor,
                 const std::vector<TimedPoint>& samples) {
    for (const TimedPoint& s : samples)
        out << actor << ',' << num(s.time) << ',' << num(s.point.x) << ',' << num(s.point.y)
            << '\n';
}

struct Bounds {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
    bool empty = true;

    void add(Vec2 p) {
        if (empty) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

void append_polyline(std::ostringstream& out, const std::vector<TimedPoint>& samples,
                     const char* color, double stroke) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << num(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (i) out << ' ';
        out << num(samples[i].point.x) << ',' << num(samples[i].point.y);
    }
    out << "\"/>\n";
}

void append_circle(std::ostringstream& out, Vec2 center, double radius, const char* extra) {
    out << "  <circle cx=\"" << num(center.x) << "\" cy=\"" << num(center.y) << "\" r=\""
        << num(radius) << "\" " << extra << "/>\n";
}

}  // namespace

std::string render_csv(const Trajectory& trajectory) {
    std::ostringstream out;
    out << "actor,time,x,y\n";
    append_rows(out, "pursuer", trajectory.pursuer_samples);
    append_rows(out, "target", trajectory.target_samples);
    return out.str();
}

std::string render_svg(const Scenario& scenario, const InterceptSolution& solution,
                       const Trajectory& trajectory) {
    const double radius = scenario.pursuer.turn_radius;
    const Vec2 left =
        turning_circle_center(scenario.pursuer_start, TurnDirection::Left, radius);
    const Vec2 right =
        turning_circle_center(scenario.pursuer_start, TurnDirection::Right, radius);

    Bounds b;
    for (Vec2 c : {left, right}) {
        b.add({c.x - radius, c.y - radius});
        b.add({c.x + radius, c.y + radius});
    }
    for (const TimedPoint& s : trajectory.pursuer_samples) b.add(s.point);
    for (const TimedPoint& s : trajectory.target_samples) b.add(s.point);
    b.add(trajectory.intercept.point);

    const double span = std::max({b.max_x - b.min_x, b.max_y - b.min_y, 1e-6});
    const double margin = 0.10 * span;
    const double view_x = b.min_x - margin;
    const double view_w = (b.max_x - b.min_x) + 2.0 * margin;
    const double view_h = (b.max_y - b.min_y) + 2.0 * margin;
    // The drawing group flips y so +y is up; the viewBox is given in flipped
    // coordinates.
    const double view_y = -(b.max_y + margin);
    const double stroke = 0.006 * span;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(view_x) << ' '
        << num(view_y) << ' ' << num(view_w) << ' ' << num(view_h) << "\" width=\"800\">\n";
    out << "<g transform=\"scale(1 -1)\">\n";

    const std::string dashed = "fill=\"none\" stroke=\"#999999\" stroke-width=\"" +
                               num(0.5 * stroke) + "\" stroke-dasharray=\"" +
                               num(2.0 * stroke) + "\"";
    append_circle(out, left, radius, dashed.c_str());
    append_circle(out, right, radius, dashed.c_str());

    append_polyline(out, trajectory.pursuer_samples, "#1f77b4", stroke);
    append_polyline(out, trajectory.target_samples, "#d62728", stroke);

    append_circle(out, scenario.pursuer_start.position(), 1.5 * stroke, "fill=\"#1f77b4\"");
    append_circle(out, scenario.target_start.position(), 1.5 * stroke, "fill=\"#d62728\"");
    append_circle(out, trajectory.intercept.point, 2.0 * stroke, "fill=\"#000000\"");

    out << "</g>\n</svg>\n";
    return out.str();
}

bool write_text_file(const std::string& content, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    out.flush();
    return static_cast<bool>(out);
}

}  // namespace dubint
