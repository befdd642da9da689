#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swipt::cli {

enum ExitCode { kOk = 0, kNumericFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (args[0] is the program name). CSV goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swipt::cli
