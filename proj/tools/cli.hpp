#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcd::cli {

// Exit codes of the hdesign tool.
enum ExitCode : int {
  kOk = 0,          // success / valid
  kNegative = 1,    // invalid design, infeasible search, count mismatch
  kUsage = 2,       // parse or usage error
  kGuard = 3,       // guard exceeded
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcd::cli
