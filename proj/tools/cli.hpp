#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hvmdp::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kAssumptionFailure = 2,
};

/// Runs the command line (args[0] is the program name) and returns the exit
/// code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hvmdp::cli
