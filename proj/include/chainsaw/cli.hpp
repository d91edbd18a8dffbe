#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainsaw {

// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitResourceCap = 3,
};

/// Runs the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainsaw
