// End-to-end reproduction suite: every stored numeric claim of the toolkit
// is recomputed and compared against its independent oracle, with a wall-
// clock budget per check.  The CLI `verify-paper` command drives this and
// exits non-zero when any check fails.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace curvcones {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;      // measured values, budgets, counts
  double elapsed_ms = 0.0;
  double budget_ms = 0.0;  // check fails when elapsed exceeds this
};

// Runs all checks in a fixed order; never throws for a failing check (the
// failure lands in `passed`/`detail`), only for infrastructure faults.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

std::string checks_to_markdown(const std::vector<CheckResult>& results);
nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& results);

}  // namespace curvcones
