#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eulerref {

/// Outcome of one identity check. `witness` names the first failing indices,
/// or the range that was covered when the check passed.
struct CheckRecord {
  std::string identity;
  bool passed = true;
  bool skipped = false;
  std::string witness;
};

/// Suite names: core, moments, roots, gf, stein, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Every check covers n up to min(nmax, its own
/// ceiling); nmax <= 0 means "use each ceiling". A check whose range becomes
/// empty is reported as skipped. Throws InvalidArgument for an unknown
/// suite; ResourceLimit propagates.
std::vector<CheckRecord> run_suite(std::string_view suite, int nmax = 0);

}  // namespace eulerref
