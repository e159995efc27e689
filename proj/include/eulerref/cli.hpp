#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerref {

/// Exit statuses of dispatch.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`;
/// usage and error messages go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerref
