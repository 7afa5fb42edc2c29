#pragma once

#include <string>
#include <vector>

namespace gwp1 {

struct CheckResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;
};

struct SelftestOptions {
  std::vector<std::string> only;  // empty: every check
  int degree = 3;                 // D for the free-energy and stabilization checks
  long prec = 128;
  unsigned seed = 20240611;       // property-based sampling
};

/// Check names in execution order.
const std::vector<std::string>& selftest_names();

/// Runs the selected checks; an exception inside a check counts as a failure.
/// Throws std::invalid_argument for an unknown name in `only`.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt = {});

}  // namespace gwp1
