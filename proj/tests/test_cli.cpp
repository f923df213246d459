#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dubint/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the CLI entry point in-process with stdout captured.
CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "dubint");
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    const int code = dubint::run_cli(static_cast<int>(args.size()), args.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

// Per-process scratch directory, removed when the test binary exits.
const fs::path& scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("dubint-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct ScratchCleanup {
    ~ScratchCleanup() {
        std::error_code ec;
        fs::remove_all(scratch_dir(), ec);
    }
} cleanup;

std::string write_scratch(const char* name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Canonical chase: pursuer twice-turned away from a crossing target.
const char* kChase = R"({
  "pursuer": {"x": 0, "y": 0, "heading": 2.0943951023931953, "speed": 5, "turn_radius": 1},
  "target":  {"x": -5, "y": 0, "heading": 1.5707963267948966, "speed": 1}
})";

// Faster target already ahead on the pursuer's own line: uncatchable.
const char* kUncatchable = R"({
  "pursuer": {"x": 0, "y": 0, "heading": 0, "speed": 1, "turn_radius": 1},
  "target":  {"x": 10, "y": 0, "heading": 0, "speed": 2}
})";

// Left-turning chase with a radius-3 turning circle (for the SVG geometry).
const char* kWideTurn = R"({
  "pursuer": {"x": 0, "y": 0, "heading": 1.0471975511965976, "speed": 5, "turn_radius": 3},
  "target":  {"x": -1, "y": 10, "heading": 4.71238898038469, "speed": 2}
})";

}  // namespace

TEST_CASE("cli solve: prints the optimal segment row") {
    const std::string path = write_scratch("chase.json", kChase);
    const CliResult r = run({"solve", path.c_str()});
    CHECK(r.code == 0);
    CHECK(r.out.find("intercept via left turn") != std::string::npos);
    CHECK(r.out.find("0.92") != std::string::npos);
    CHECK(r.out.find("4.30") != std::string::npos);
    CHECK(r.out.find("6.26") != std::string::npos);
}

TEST_CASE("cli solve: forced right branch") {
    const std::string path = write_scratch("chase.json", kChase);
    const CliResult r = run({"solve", path.c_str(), "--branch", "right"});
    CHECK(r.code == 0);
    CHECK(r.out.find("intercept via right turn") != std::string::npos);
    CHECK(r.out.find("forced right") != std::string::npos);
    // Exact values for this branch, printed at two decimals.
    CHECK(r.out.find("5.71") != std::string::npos);
    CHECK(r.out.find("14.13") != std::string::npos);
}

TEST_CASE("cli solve: --json emits a machine-readable solution") {
    const std::string path = write_scratch("chase.json", kChase);
    const CliResult r = run({"solve", path.c_str(), "--json"});
    CHECK(r.code == 0);

    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("status") == "optimal");
    CHECK(j.at("branch") == "left");
    CHECK(std::abs(j.at("total_length").get<double>() - 6.2596) < 0.001);
    CHECK(std::abs(j.at("lengths").at("left_arc").get<double>() - 0.9185) < 0.001);
    CHECK(j.at("lengths").at("right_arc").get<double>() == 0.0);
    CHECK(std::abs(j.at("intercept").at("y").get<double>() - 1.0433) < 0.001);
}

TEST_CASE("cli solve: --degrees reads headings in degrees") {
    const char* degrees_doc = R"({
      "pursuer": {"x": 0, "y": 0, "heading": 120, "speed": 5, "turn_radius": 1},
      "target":  {"x": -5, "y": 0, "heading": 90, "speed": 1}
    })";
    const std::string path = write_scratch("degrees.json", degrees_doc);
    const CliResult r = run({"solve", path.c_str(), "--degrees"});
    CHECK(r.code == 0);
    CHECK(r.out.find("6.26") != std::string::npos);
}

TEST_CASE("cli solve: infeasible scenario exits 2") {
    const std::string path = write_scratch("uncatchable.json", kUncatchable);
    const CliResult text = run({"solve", path.c_str()});
    CHECK(text.code == 2);
    CHECK(text.out.find("infeasible") != std::string::npos);

    const CliResult json = run({"solve", path.c_str(), "--json"});
    CHECK(json.code == 2);
    CHECK(nlohmann::json::parse(json.out).at("status") == "infeasible");
}

TEST_CASE("cli solve: bad input exits 1") {
    CHECK(run({"solve", "/nonexistent/scenario.json"}).code == 1);

    const std::string path = write_scratch("broken.json", "{ not json");
    CHECK(run({"solve", path.c_str()}).code == 1);

    const std::string unknown = write_scratch("unknown.json", R"({
      "pursuer": {"x": 0, "y": 0, "heading": 0, "speed": 5, "turn_radius": 1},
      "target":  {"x": -5, "y": 0, "heading": 0, "speed": 1},
      "extra": {}
    })");
    CHECK(run({"solve", unknown.c_str()}).code == 1);
}

TEST_CASE("cli: usage errors exit 1") {
    CHECK(run({}).code == 1);                       // no subcommand
    CHECK(run({"solve"}).code == 1);                // missing scenario path
    CHECK(run({"frobnicate"}).code == 1);           // unknown subcommand
    CHECK(run({"tables"}).code == 1);               // neither --table nor --all
    CHECK(run({"tables", "--table", "9"}).code == 1);  // out of range
    const std::string path = write_scratch("chase.json", kChase);
    CHECK(run({"solve", path.c_str(), "--branch", "backwards"}).code == 1);
}

TEST_CASE("cli tables: canonical table reproduces within tolerance") {
    const CliResult r = run({"tables", "--table", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Table 1") != std::string::npos);
    CHECK(r.out.find("computed") != std::string::npos);
    CHECK(r.out.find("reference") != std::string::npos);
    CHECK(r.out.find("deviation") != std::string::npos);
    CHECK(r.out.find(": ok") != std::string::npos);
}

TEST_CASE("cli tables: provenance notes are printed") {
    const CliResult r = run({"tables", "--table", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("note:") != std::string::npos);
    CHECK(r.out.find("inferred") != std::string::npos);
}

TEST_CASE("cli tables: second benchmark's detour row exceeds the gate") {
    // The published detour row for this table is internally inconsistent by
    // more than the 0.05 gate (its straight legs do not meet its own total),
    // so an honest reproduction must flag it and exit nonzero.
    const CliResult r = run({"tables", "--table", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("EXCEEDED") != std::string::npos);
}

TEST_CASE("cli simulate: writes a well-formed CSV") {
    const std::string path = write_scratch("chase.json", kChase);
    const std::string csv = (scratch_dir() / "out.csv").string();
    const CliResult r = run({"simulate", path.c_str(), "--out", csv.c_str(),
                             "--arc-samples", "50", "--line-samples", "50"});
    REQUIRE(r.code == 0);

    const std::string body = read_file(csv);
    CHECK(body.rfind("actor,time,x,y\n", 0) == 0);
    CHECK(body.find("pursuer,0,0,0\n") != std::string::npos);
    CHECK(body.find("target,0,-5,0\n") != std::string::npos);

    // 1 start + 50 arc + 50 line pursuer rows, 1 + 50 target rows, header.
    int lines = 0;
    for (char c : body)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + 101 + 51);
}

TEST_CASE("cli simulate: SVG carries true-coordinate turning circles") {
    const std::string path = write_scratch("wide.json", kWideTurn);
    const std::string csv = (scratch_dir() / "wide.csv").string();
    const std::string svg = (scratch_dir() / "wide.svg").string();
    const CliResult r = run({"simulate", path.c_str(), "--out", csv.c_str(),
                             "--svg", svg.c_str()});
    REQUIRE(r.code == 0);

    const std::string body = read_file(svg);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("scale(1 -1)") != std::string::npos);
    // Left turning circle for a radius-3 pursuer heading 60 degrees at the
    // origin: center (-3*sin(pi/3), 3*cos(pi/3)) = (-2.598..., 1.5).
    CHECK(body.find("cx=\"-2.59807621\" cy=\"1.5\" r=\"3\"") != std::string::npos);
    CHECK(body.find("polyline") != std::string::npos);
    CHECK(body.find("viewBox=") != std::string::npos);
}

TEST_CASE("cli simulate: infeasible scenario writes nothing and exits 2") {
    const std::string path = write_scratch("uncatchable.json", kUncatchable);
    const std::string csv = (scratch_dir() / "nothing.csv").string();
    const CliResult r = run({"simulate", path.c_str(), "--out", csv.c_str()});
    CHECK(r.code == 2);
    CHECK(!fs::exists(csv));
}

TEST_CASE("cli simulate: unwritable output path exits 1") {
    const std::string path = write_scratch("chase.json", kChase);
    const CliResult r =
        run({"simulate", path.c_str(), "--out", "/nonexistent-dir/out.csv"});
    CHECK(r.code == 1);
}

TEST_CASE("cli simulate: byte-identical across repeated runs") {
    const std::string path = write_scratch("chase.json", kChase);
    const std::string csv_a = (scratch_dir() / "rep_a.csv").string();
    const std::string svg_a = (scratch_dir() / "rep_a.svg").string();
    const std::string csv_b = (scratch_dir() / "rep_b.csv").string();
    const std::string svg_b = (scratch_dir() / "rep_b.svg").string();

    REQUIRE(run({"simulate", path.c_str(), "--out", csv_a.c_str(), "--svg",
                 svg_a.c_str()}).code == 0);
    REQUIRE(run({"simulate", path.c_str(), "--out", csv_b.c_str(), "--svg",
                 svg_b.c_str()}).code == 0);

    CHECK(read_file(csv_a) == read_file(csv_b));
    CHECK(read_file(svg_a) == read_file(svg_b));
    CHECK(!read_file(csv_a).empty());
}
