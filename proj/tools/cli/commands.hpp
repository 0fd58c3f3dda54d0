#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trapsusy::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Name of the environment variable holding the default output format.
inline constexpr const char* format_env = "TRAPSUSY_FORMAT";

/// Runs the command line `args` (without the program name), writing tables
/// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace trapsusy::cli
