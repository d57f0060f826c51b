#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ugs {

enum ExitCode { kOk = 0, kUsage = 1, kBadScenario = 2, kRejected = 3, kSchedulingFailed = 4 };

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ugs
