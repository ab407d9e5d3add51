#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace susyprop {

// One record of the verification suite.  `pass` already accounts for the
// check's comparison direction (most metrics must stay below tolerance;
// refinement-ratio checks must stay above it).
struct CheckResult {
  std::string name;
  double metric = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
};

struct CheckOptions {
  int threads = 0;                                //  0 = hardware concurrency
  std::uint64_t seed = 12345;                     //  for randomized property checks
  std::map<std::string, double> tolerance_overrides;
};

// Names of every registered check, in execution order.  Checks whose name
// starts with "acc" implement the acceptance criteria.
std::vector<std::string> check_names();

// Runs every check whose name contains `name_filter` (empty = all).
std::vector<CheckResult> run_checks(const std::string& name_filter,
                                    const CheckOptions& opts = {});

inline std::vector<CheckResult> run_acceptance(const CheckOptions& opts = {}) {
  return run_checks("acc", opts);
}

}  // namespace susyprop
