#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmc {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_parse = 2, exit_guard = 3 };

/// Runs one command line (without the program name). Reports go to `out`
/// as `key value` lines sorted by key; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmc
