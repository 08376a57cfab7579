#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdrlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitSuiteFail = 3,
  kExitBudgetExceeded = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdrlab
