#ifndef TORICODE_VERIFY_HPP
#define TORICODE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricode/budget.hpp"

namespace toricode {

// A verification scenario compares closed-form predictions against brute
// force. Gated scenarios decide the exit code; report-only scenarios surface
// numbers (e.g. the length formula on mixed disconnected graphs) without
// gating. All comparisons are exact integer equality.

struct VerifyConfig {
  std::uint64_t budget_ops = Budget::kDefaultOps;
  unsigned workers = 1;  // scenario-level parallelism
  std::uint64_t seed = 0;
};

struct CheckResult {
  std::string name;
  std::string expected_source, expected_value;
  std::string computed_source, computed_value;
  bool pass = false;
  double wall_ms = 0.0;
};

struct ScenarioResult {
  std::string id, suite, graph, field;
  int degree = -1;  // -1 when not applicable
  bool gated = true;
  std::string status;  // "pass" | "fail" | "skipped" | "report"
  std::string note;
  std::vector<CheckResult> checks;
  double wall_ms = 0.0;
};

struct Scenario {
  std::string id, suite, graph, field;
  int degree = -1;
  bool gated = true;
  std::function<std::vector<CheckResult>(const VerifyConfig&)> run;
};

// Suites in canonical order (without the "all" pseudo-suite).
const std::vector<std::string>& suite_names();
// Scenarios of one suite, or of every suite for "all". Throws on unknown names.
std::vector<Scenario> scenarios_for(const std::string& suite);

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t budget_ops = Budget::kDefaultOps;
  unsigned workers = 1;
  std::vector<ScenarioResult> scenarios;
  std::size_t passed = 0, failed = 0, skipped = 0, report_only = 0;
};

Report run_suite(const std::string& suite, const VerifyConfig& cfg);

nlohmann::json report_json(const Report& report);
void print_report_table(const Report& report, std::ostream& out);

// 0 iff no gated scenario failed; strict additionally demands nothing skipped.
int report_exit_code(const Report& report, bool strict);

struct ReplayResult {
  Report fresh;
  bool identical = false;
  std::vector<std::string> mismatches;
};

// Re-runs every scenario recorded in a saved report under the saved seed and
// budget and compares all expected/computed values.
ReplayResult replay_report(const nlohmann::json& saved, unsigned workers);

}  // namespace toricode

#endif
