#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stacky {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_io = 1, exit_invalid = 2, exit_inconsistent = 3 };

/// Runs the tool on `args` (without the program name). `default_color` is
/// used unless STACKY_COLOR overrides it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool default_color);

}  // namespace stacky
