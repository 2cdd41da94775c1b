#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regfactor {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_pass = 0, exit_theorem_failure = 1, exit_usage = 2 };

/// Runs the tool on `args` (args[0] is the program name). Reports and
/// summaries go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace regfactor
