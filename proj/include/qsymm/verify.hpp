#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsymm/serialize.hpp"

namespace qsymm {

struct CheckOutcome {
  bool pass = false;
  std::string residual;  // empty when there is nothing to show
  std::string detail;
};

struct CheckResult {
  std::string id, group, paper_ref;
  int criterion = 0;     // acceptance criterion, 0 for supplementary checks
  std::string status;    // "pass", "fail" or "error"
  double runtime_ms = 0;
  std::string residual, detail;
};

// Test hooks for the negative controls of the suite itself.
struct FaultInjection {
  bool j_sign = false;       // flip a sign in every reflection-equation J
  bool operator_coeff = false;  // perturb the radial operator's shift coefficient
};

struct VerifyConfig {
  std::vector<std::string> only;  // groups or id prefixes; empty = everything
  int jobs = 1;
  int truncation = 40;
  FaultInjection inject;
};

struct CheckSpec {
  std::string id, group, paper_ref;
  int criterion = 0;
  std::function<CheckOutcome(const VerifyConfig&)> run;
};

const std::vector<CheckSpec>& check_registry();

// Results are sorted by id whatever the execution order.
std::vector<CheckResult> run_checks(const VerifyConfig& cfg);
bool all_passed(const std::vector<CheckResult>& results);

Json report_to_json(const std::vector<CheckResult>& results, bool with_runtime = true);
std::string report_to_csv(const std::vector<CheckResult>& results);

// Runtime budget of each acceptance criterion in milliseconds.
double criterion_budget_ms(int criterion);
std::string criterion_title(int criterion);

}  // namespace qsymm
