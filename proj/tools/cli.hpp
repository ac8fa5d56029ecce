#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpq::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpq::cli
