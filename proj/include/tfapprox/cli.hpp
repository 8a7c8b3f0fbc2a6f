#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfa {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitUsage = 2 };

/// Runs the tool with args[0] as the program name. Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace tfa
