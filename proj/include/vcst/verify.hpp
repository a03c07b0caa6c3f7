#pragma once

#include <string>
#include <vector>

namespace vcst {

// One verification check: a library property asserted over a fixed,
// deterministic battery of instances.  `detail` reports what was measured
// (instance counts, extreme values) whether or not the check passed.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Suite names accepted by run_verify_suite: geometry, oracles, lp,
// reductions, debt.
std::vector<std::string> verify_suite_names();

// Runs one named suite; throws InvalidInstanceError for unknown names.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

// Every check of every suite in a fixed order — the full acceptance
// battery.  Individual check failures are reported, not thrown.
std::vector<CheckResult> run_all_checks();

}  // namespace vcst
