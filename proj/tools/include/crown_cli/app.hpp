#pragma once

#include <ostream>

namespace crown::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitUnwritable = 3,
  kExitInvalidTarget = 4,
};

/// Parses argv, runs the selected suite, prints the JSON report to `out`
/// and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crown::cli
