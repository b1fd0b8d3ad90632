#pragma once

#include <string>
#include <vector>

namespace grassmoduli::verify {

/// Outcome of one named invariant check. `criterion` ties the check to an
/// acceptance criterion (0 for module-level invariants); `detail` carries the
/// failure description, or report content for checks whose job is to report.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  int criterion = 0;
  std::string detail;
  double millis = 0.0;
};

struct VerifyOptions {
  int max_n = 6;  // bound on p+q in the (p,q,k) sweeps
  int max_k = 3;  // bound on k in the (p,q,k) sweeps
  std::vector<std::string> suites;  // empty selects every suite
};

const std::vector<std::string>& suite_names();

/// Runs the selected suites; throws std::invalid_argument on bad bounds or
/// an unknown suite name. Results come back in a fixed deterministic order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace grassmoduli::verify
