#pragma once

// Built-in benchmark scenarios and their reference result rows, used by the
// CLI "tables" command and by tests. Each row fixes a scenario, optionally a
// forced turn direction, and the ten expected cells (four segment lengths,
// four segment times, total length, total time) quoted at two decimals.

#include <array>
#include <optional>
#include <vector>

#include "dubint/geometry.hpp"
#include "dubint/solver.hpp"

namespace dubint {

inline constexpr std::size_t kRowCells = 10;

struct ReferenceRow {
    const char* label;  // "optimal", "forced right", ...
    Scenario scenario;
    std::optional<TurnDirection> forced;  // absent = search both branches
    std::array<double, kRowCells> expected;
};

struct ReferenceTable {
    int id = 0;
    const char* title = "";
    const char* note = nullptr;  // extra provenance note for the CLI, if any
    std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceTable>& reference_tables();

// Convenience accessor for tests; throws std::out_of_range on bad indices.
const ReferenceRow& reference_row(int table_id, std::size_t row_index);

struct RowComparison {
    bool solved = false;
    std::array<double, kRowCells> computed{};
    std::array<double, kRowCells> deviation{};
};

// Solves a row's scenario (restricted to the forced branch when set) and
// diffs the result against the expected cells.
RowComparison compare_row(const ReferenceRow& row, const SolveOptions& options = {});

// Largest per-cell deviation; +infinity when the row failed to solve.
double max_deviation(const RowComparison& comparison);

}  // namespace dubint
