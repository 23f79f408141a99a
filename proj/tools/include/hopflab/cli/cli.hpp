#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopflab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kInfeasible = 3 };

/// Runs one hopf-lab invocation. `args` excludes the program name. Results
/// go to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopflab::cli
