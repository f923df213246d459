#pragma once

namespace dubint {

// Command-line front end (solve / simulate / tables subcommands). Returns
// the process exit code: 0 success, 1 usage/IO/parse error or failed table
// reproduction, 2 infeasible scenario.
int run_cli(int argc, const char* const* argv);

}  // namespace dubint
