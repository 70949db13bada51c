#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polybern::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kCrossCheckFailure = 2,
    kUsageError = 64,
};

/// Runs the command line (without the program name). Output is written to
/// `out` once, after the command has finished; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polybern::cli
