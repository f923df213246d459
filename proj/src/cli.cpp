#include "dubint/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dubint/export.hpp"
#include "dubint/reference_tables.hpp"
#include "dubint/scenario_io.hpp"
#include "dubint/solver.hpp"
#include "dubint/trajectory.hpp"

namespace dubint {

namespace {

constexpr double kTableTolerance = 0.05;

std::string format_cells(const char* label, const std::array<double, kRowCells>& cells,
                         const char* fmt) {
    char buf[256];
    char line[512];
    std::string body;
    for (std::size_t i = 0; i < kRowCells; ++i) {
        std::snprintf(buf, sizeof buf, fmt, cells[i]);
        body += buf;
        if (i == 3 || i == 7) body += " |";
    }
    std::snprintf(line, sizeof line, "  %-16s|%s", label, body.c_str());
    return line;
}

void print_row_header(std::ostream& out) {
    char line[512];
    std::snprintf(line, sizeof line, "  %-16s|%8s%8s%8s%8s |%8s%8s%8s%8s |%8s%8s", "",
                  "left", "right", "line", "target", "left", "right", "line", "target",
                  "length", "time");
    out << "  " << std::string(16, ' ')
        << "|             length              |              time               |     totals\n"
        << line << '\n';
}

std::array<double, kRowCells> solution_cells(const InterceptSolution& s) {
    return {s.lengths.left_arc,      s.lengths.right_arc, s.lengths.straight,
            s.lengths.target_travel, s.durations.left_arc, s.durations.right_arc,
            s.durations.straight,    s.durations.target_travel, s.total_length,
            s.total_time};
}

std::optional<InterceptSolution> best_of_branch(const Scenario& scenario, TurnDirection branch,
                                                const SolveOptions& options) {
    std::optional<InterceptSolution> best;
    for (const InterceptSolution& candidate : solve_branch(scenario, branch, options))
        if (!best || candidate.total_length < best->total_length) best = candidate;
    return best;
}

nlohmann::ordered_json solution_json(const InterceptSolution& s) {
    nlohmann::ordered_json j;
    j["status"] = "optimal";
    j["branch"] = s.branch == TurnDirection::Left ? "left" : "right";
    j["lengths"] = {{"left_arc", s.lengths.left_arc},
                    {"right_arc", s.lengths.right_arc},
                    {"straight", s.lengths.straight},
                    {"target_travel", s.lengths.target_travel}};
    j["durations"] = {{"left_arc", s.durations.left_arc},
                      {"right_arc", s.durations.right_arc},
                      {"straight", s.durations.straight},
                      {"target_travel", s.durations.target_travel}};
    j["total_length"] = s.total_length;
    j["total_time"] = s.total_time;
    j["intercept"] = {{"x", s.intercept_point.x}, {"y", s.intercept_point.y}};
    return j;
}

struct CommonArgs {
    std::string scenario_path;
    bool degrees = false;
    int grid = 0;  // 0 = take the scenario file's (or default) value
};

struct SolveArgs : CommonArgs {
    bool json = false;
    std::string branch;  // "", "left" or "right"
};

struct SimulateArgs : CommonArgs {
    std::string csv_path;
    std::string svg_path;
    int arc_samples = 0;
    int line_samples = 0;
};

struct TablesArgs {
    int table = 0;
    bool all = false;
};

int cmd_solve(const SolveArgs& args) {
    ScenarioDocument doc;
    try {
        doc = load_scenario_file(args.scenario_path, args.degrees);
    } catch (const ScenarioParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    const SolveOptions options{args.grid > 0 ? args.grid : doc.solver.grid_size};

    std::optional<InterceptSolution> best;
    const char* label = "optimal";
    if (args.branch == "left") {
        best = best_of_branch(doc.scenario, TurnDirection::Left, options);
        label = "forced left";
    } else if (args.branch == "right") {
        best = best_of_branch(doc.scenario, TurnDirection::Right, options);
        label = "forced right";
    } else {
        best = solve(doc.scenario, options).best;
    }

    if (!best) {
        if (args.json)
            std::cout << nlohmann::ordered_json{{"status", "infeasible"}}.dump(2) << '\n';
        else
            std::cout << "status: infeasible (no interception on the searched branches)\n";
        return 2;
    }

    if (args.json) {
        std::cout << solution_json(*best).dump(2) << '\n';
    } else {
        std::cout << "status: intercept via "
                  << (best->branch == TurnDirection::Left ? "left" : "right") << " turn\n";
        print_row_header(std::cout);
        std::cout << format_cells(label, solution_cells(*best), "%8.2f") << '\n';
    }
    return 0;
}

int cmd_simulate(const SimulateArgs& args) {
    ScenarioDocument doc;
    try {
        doc = load_scenario_file(args.scenario_path, args.degrees);
    } catch (const ScenarioParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    const SolveOptions options{args.grid > 0 ? args.grid : doc.solver.grid_size};

    const SolveReport report = solve(doc.scenario, options);
    if (!report.best) {
        std::cerr << "status: infeasible, nothing to simulate\n";
        return 2;
    }

    const int arc = args.arc_samples > 0 ? args.arc_samples : doc.solver.arc_samples;
    const int line = args.line_samples > 0 ? args.line_samples : doc.solver.line_samples;
    const Trajectory trajectory = sample(*report.best, doc.scenario, arc, line);

    if (!write_text_file(render_csv(trajectory), args.csv_path)) {
        std::cerr << "cannot write " << args.csv_path << '\n';
        return 1;
    }
    if (!args.svg_path.empty() &&
        !write_text_file(render_svg(doc.scenario, *report.best, trajectory), args.svg_path)) {
        std::cerr << "cannot write " << args.svg_path << '\n';
        return 1;
    }
    return 0;
}

int cmd_reproduce_tables(const TablesArgs& args) {
    double worst = 0.0;
    for (const ReferenceTable& table : reference_tables()) {
        if (!args.all && table.id != args.table) continue;

        std::cout << "Table " << table.id << ": " << table.title << '\n';
        if (table.note) std::cout << "  note: " << table.note << '\n';
        print_row_header(std::cout);
        for (const ReferenceRow& row : table.rows) {
            const RowComparison rc = compare_row(row);
            std::cout << "  " << row.label << '\n';
            if (!rc.solved) {
                std::cout << "    no interception found\n";
                worst = std::numeric_limits<double>::infinity();
                continue;
            }
            std::cout << format_cells("  computed", rc.computed, "%8.2f") << '\n'
                      << format_cells("  reference", row.expected, "%8.2f") << '\n'
                      << format_cells("  |deviation|", rc.deviation, "%8.4f") << '\n';
            worst = std::max(worst, max_deviation(rc));
        }
        std::cout << '\n';
    }

    const bool ok = worst <= kTableTolerance;
    char line[128];
    std::snprintf(line, sizeof line, "worst deviation %.4f, tolerance %.2f: %s", worst,
                  kTableTolerance, ok ? "ok" : "EXCEEDED");
    std::cout << line << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Shortest-intercept planner: one bounded-curvature turn, then a straight chase"};
    app.name("dubint");
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a scenario and print the segment table");
    solve_cmd->add_option("scenario", solve_args.scenario_path, "Scenario JSON file")->required();
    solve_cmd->add_flag("--json", solve_args.json, "Emit the solution as JSON");
    solve_cmd->add_option("--branch", solve_args.branch, "Restrict the turn direction")
        ->check(CLI::IsMember({"left", "right"}));
    solve_cmd->add_flag("--degrees", solve_args.degrees, "Scenario headings are in degrees");
    solve_cmd->add_option("--grid", solve_args.grid, "Turn-angle scan intervals")
        ->check(CLI::PositiveNumber);

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Export sampled trajectories");
    sim_cmd->add_option("scenario", sim_args.scenario_path, "Scenario JSON file")->required();
    sim_cmd->add_option("--out", sim_args.csv_path, "CSV output path")->required();
    sim_cmd->add_option("--svg", sim_args.svg_path, "Optional SVG plot path");
    sim_cmd->add_option("--arc-samples", sim_args.arc_samples, "Samples along the arc")
        ->check(CLI::Range(2, 1000000));
    sim_cmd->add_option("--line-samples", sim_args.line_samples, "Samples along straight runs")
        ->check(CLI::Range(2, 1000000));
    sim_cmd->add_flag("--degrees", sim_args.degrees, "Scenario headings are in degrees");
    sim_cmd->add_option("--grid", sim_args.grid, "Turn-angle scan intervals")
        ->check(CLI::PositiveNumber);

    TablesArgs table_args;
    auto* tables_cmd =
        app.add_subcommand("tables", "Compare the solver against the built-in reference tables");
    tables_cmd->add_option("--table", table_args.table, "Reference table id")
        ->check(CLI::Range(1, 7));
    tables_cmd->add_flag("--all", table_args.all, "Run every reference table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // fold CLI11's error codes into "usage error"
    }

    if (solve_cmd->parsed()) return cmd_solve(solve_args);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args);
    if (tables_cmd->parsed()) {
        if (table_args.all == (table_args.table != 0)) {
            std::cerr << "tables: pass exactly one of --table N or --all\n";
            return 1;
        }
        return cmd_reproduce_tables(table_args);
    }
    return 1;
}

}  // namespace dubint
