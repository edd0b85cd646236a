// One PASS/FAIL line per acceptance criterion. Exact equality throughout;
// runtime budgets are checked against the serial wall time of each criterion.
#include <cstdio>
#include <map>

#include "qsymm/verify.hpp"

using namespace qsymm;

namespace {

struct Tally {
  int checks = 0, failed = 0;
  double ms = 0;
  std::string first_failure;
};

void add(Tally& t, const CheckResult& r, bool expect_pass) {
  ++t.checks;
  t.ms += r.runtime_ms;
  bool ok = expect_pass ? r.status == "pass" : r.status == "fail";
  if (!ok) {
    ++t.failed;
    if (t.first_failure.empty()) t.first_failure = r.id + " (" + r.status + ")";
  }
}

}  // namespace

int main() {
  VerifyConfig cfg;
  cfg.jobs = 1;
  auto results = run_checks(cfg);

  std::map<int, Tally> tally;
  for (const auto& r : results)
    if (r.criterion > 0) add(tally[r.criterion], r, true);

  // the suite must also notice corrupted inputs when they are injected
  VerifyConfig bad_j = cfg;
  bad_j.only = {"qg.reflVV", "qg.urefl"};
  bad_j.inject.j_sign = true;
  for (const auto& r : run_checks(bad_j)) add(tally[12], r, false);
  VerifyConfig bad_op = cfg;
  bad_op.only = {"radial.spherical"};
  bad_op.inject.operator_coeff = true;
  for (const auto& r : run_checks(bad_op)) add(tally[12], r, false);

  int failures = 0;
  for (int c = 1; c <= 12; ++c) {
    const Tally& t = tally[c];
    double budget = criterion_budget_ms(c);
    bool in_time = t.ms <= budget;
    bool pass = t.checks > 0 && t.failed == 0 && in_time;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d  %-28s %3d checks  %8.1f ms (budget %.0f ms)", pass ? "PASS" : "FAIL", c,
                criterion_title(c).c_str(), t.checks, t.ms, budget);
    if (t.failed > 0) std::printf("  %d failing, first: %s", t.failed, t.first_failure.c_str());
    if (!in_time) std::printf("  over budget");
    std::printf("\n");
  }
  std::printf("%d of 12 criteria pass\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
