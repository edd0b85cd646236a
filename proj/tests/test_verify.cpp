#include <doctest.h>

#include <set>

#include "qsymm/expr.hpp"
#include "qsymm/verify.hpp"

using namespace qsymm;

namespace {

VarTablePtr tab() {
  static const VarTablePtr t = make_vars({"q", "s", "t"});
  return t;
}
RatFunc v(const char* n) { return LaurentPoly::variable(tab(), n); }
RatFunc c(long a, long b = 1) { return RatFunc(tab(), ExactScalar(a, b)); }

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("missing " + id);
}

}  // namespace

TEST_CASE("expression parser") {
  CHECK(parse_expression("-q^3", tab()) == -v("q").pow(3));
  CHECK(parse_expression("s*q/t", tab()) == v("s") * v("q") / v("t"));
  CHECK(parse_expression("1/2", tab()) == c(1, 2));
  CHECK(parse_expression("-1/3", tab()) == c(-1, 3));
  CHECK(parse_expression("q^-2", tab()) == v("q").pow(-2));
  CHECK(parse_expression("q^(-2)", tab()) == v("q").pow(-2));
  CHECK(parse_expression("(1 - q^2)/(1 - q)", tab()) == c(1) + v("q"));
  CHECK(parse_expression("2*q - (s + t)^2", tab()) == c(2) * v("q") - (v("s") + v("t")) * (v("s") + v("t")));
  CHECK(parse_expression(" q ", tab()) == v("q"));
  CHECK_THROWS_AS(parse_expression("x", tab()), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("1/(q-q)", tab()), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("(q", tab()), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("q^s", tab()), std::invalid_argument);
  CHECK_THROWS_AS(parse_expression("", tab()), std::invalid_argument);
}

TEST_CASE("registry") {
  const auto& reg = check_registry();
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& s : reg) {
    CHECK(ids.insert(s.id).second);
    CHECK_FALSE(s.paper_ref.empty());
    criteria.insert(s.criterion);
  }
  for (int k = 1; k <= 12; ++k) CHECK(criteria.count(k) == 1);
  for (int k = 1; k <= 12; ++k) CHECK(criterion_budget_ms(k) > 0);
}

TEST_CASE("filtering and report shape") {
  VerifyConfig cfg;
  cfg.only = {"radial"};
  auto rs = run_checks(cfg);
  REQUIRE_FALSE(rs.empty());
  for (const auto& r : rs) CHECK(r.group == "radial");
  CHECK(all_passed(rs));
  for (std::size_t i = 1; i < rs.size(); ++i) CHECK(rs[i - 1].id < rs[i].id);

  Json j = report_to_json(rs, false);
  REQUIRE(j["checks"].size() == rs.size());
  for (const auto& e : j["checks"]) {
    CHECK(e.contains("check_id"));
    CHECK(e.contains("paper_ref"));
    CHECK(e["status"] == "pass");
    CHECK_FALSE(e.contains("runtime_ms"));
  }
  CHECK(report_to_json(rs)["checks"][0].contains("runtime_ms"));

  cfg.only = {"qg.casimir.n2"};
  auto one = run_checks(cfg);
  REQUIRE(one.size() == 1);
  CHECK(one[0].status == "pass");

  cfg.only = {"no-such-group"};
  CHECK_THROWS_AS(run_checks(cfg), std::invalid_argument);
}

TEST_CASE("serial and parallel runs agree") {
  VerifyConfig cfg;
  cfg.only = {"qg.sanity", "mk.A1"};
  auto a = run_checks(cfg);
  cfg.jobs = 4;
  auto b = run_checks(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].residual == b[i].residual);
  }
}

TEST_CASE("injected faults are reported with residuals") {
  VerifyConfig cfg;
  cfg.only = {"qg.reflVV.case1", "qg.urefl.grassmannian.n2", "qg.urefl.grassmannian.n4"};
  for (const auto& r : run_checks(cfg)) CHECK(r.status == "pass");
  cfg.inject.j_sign = true;
  auto bad = run_checks(cfg);
  CHECK_FALSE(all_passed(bad));
  for (const auto& r : bad) {
    CHECK_MESSAGE(r.status == "fail", r.id);
    CHECK_FALSE(r.residual.empty());
  }

  VerifyConfig op;
  op.only = {"radial.spherical.n2"};
  op.inject.operator_coeff = true;
  auto rs = run_checks(op);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == "fail");
  CHECK_FALSE(rs[0].residual.empty());
}

TEST_CASE("the printed J^sigma fails the V (x) V reflection equation") {
  VerifyConfig cfg;
  cfg.only = {"qg.reflVV.jsigma.n2", "qg.reflVV.jsigma.n3"};
  auto rs = run_checks(cfg);
  REQUIRE(rs.size() == 2);
  CHECK(find(rs, "qg.reflVV.jsigma.n2").status == "fail");
  CHECK(find(rs, "qg.reflVV.jsigma.n3").status == "fail");
}

TEST_CASE("csv report") {
  VerifyConfig cfg;
  cfg.only = {"radial.bridge"};
  std::string csv = report_to_csv(run_checks(cfg));
  CHECK(csv.rfind("check_id,group,criterion,status,runtime_ms,residual\n", 0) == 0);
  CHECK(csv.find("radial.bridge,radial,3,pass,") != std::string::npos);
}
