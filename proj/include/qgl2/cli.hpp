#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgl2/weights.hpp"

namespace qgl2::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Parses "a" or "a,b" (b defaults to 0). Throws DomainError on malformed
/// input; dominance is not checked here.
DominantWeight parse_weight(const std::string& text);

/// Runs the tool on `args` (args[0] is the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgl2::cli
