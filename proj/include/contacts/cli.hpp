#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contacts {

/// Exit statuses of the contacts tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_unreadable = 1,
    exit_malformed = 2,
    exit_usage = 1,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contacts
