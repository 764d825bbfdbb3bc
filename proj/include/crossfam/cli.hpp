#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossfam::cli {

enum ExitCode : int {
    kVerified = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kBudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name). The JSON report
/// goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crossfam::cli
