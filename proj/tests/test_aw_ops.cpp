#include <doctest.h>

#include <cmath>

#include "qsymm/aw_ops.hpp"

using namespace qsymm;

namespace {

struct Sym {
  VarTablePtr t = make_vars({"a", "b", "c", "d", "q", "z"});
  LaurentPoly v(const char* n, int e = 1) const { return LaurentPoly::variable(t, n, e); }
  LaurentPoly one() const { return LaurentPoly(t, 1); }
  AWParams params() const { return make_aw_params(v("a"), v("b"), v("c"), v("d"), v("q")); }
};

AWParams numeric(const VarTablePtr& t, ExactScalar q, ExactScalar a, ExactScalar b, ExactScalar c, ExactScalar d) {
  return make_aw_params(RatFunc(t, a), RatFunc(t, b), RatFunc(t, c), RatFunc(t, d), LaurentPoly(t, q));
}

double poch_inf(double x, double q) {
  double r = 1;
  for (int k = 0; k < 400; ++k) r *= 1 - x * std::pow(q, k);
  return r;
}

double mp_to_double(const ExactScalar& x) { return x.get_d(); }

}  // namespace

TEST_CASE("operator on constants and on degree 1") {
  Sym s;
  auto p = s.params();
  auto op = aw_operator(p);
  CHECK(apply_qdiff(op, s.one()).is_zero());  // coeff_id = 0, eigenvalue 0
  CHECK(aw_eigenvalue(0, p).is_zero());
  LaurentPoly p1 = aw_polynomial(1, p);
  CHECK(RatFunc(apply_qdiff(op, p1)) == aw_eigenvalue(1, p) * RatFunc(p1));
}

TEST_CASE("all parameters zero: z + 1/z") {
  auto t = make_vars({"q", "z"});
  LaurentPoly q = LaurentPoly::variable(t, "q"), z = LaurentPoly::variable(t, "z"),
              zi = LaurentPoly::variable(t, "z", -1), one(t, 1);
  RatFunc zero(t);
  auto p = make_aw_params(zero, zero, zero, zero, q);
  auto out = apply_qdiff(aw_operator(p), z + zi);
  // eigenvalue -(1 - q^{-1}) for n = 1 when abcd = 0
  CHECK(RatFunc(out) == -(RatFunc(one) - RatFunc(q).pow(-1)) * RatFunc(z + zi));
}

TEST_CASE("non-symmetric input is rejected") {
  Sym s;
  CHECK_THROWS_WITH_AS(apply_qdiff(aw_operator(s.params()), s.v("z")), "operator output not polynomial",
                       std::domain_error);
}

TEST_CASE("symbolic eigen sweep n <= 5") {
  Sym s;
  auto rep = verify_aw_eigen(5, s.params());
  REQUIRE(rep.entries.size() == 6);
  for (const auto& e : rep.entries) CHECK_MESSAGE(e.pass, "n = ", e.n);
  CHECK(rep.all_pass());
}

TEST_CASE("numeric eigen sweep and distinct eigenvalues") {
  auto t = make_vars({"z"});
  auto p = numeric(t, ExactScalar(1, 2), ExactScalar(1, 3), ExactScalar(-1, 5), ExactScalar(1, 7), ExactScalar(1, 11));
  auto rep = verify_aw_eigen(8, p);
  CHECK(rep.all_pass());
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    for (std::size_t j = i + 1; j < rep.entries.size(); ++j)
      CHECK_FALSE(rep.entries[i].eigenvalue == rep.entries[j].eigenvalue);
}

TEST_CASE("serial and parallel sweeps agree") {
  Sym s;
  auto a = verify_aw_eigen(4, s.params(), Exec::serial);
  auto b = verify_aw_eigen(4, s.params(), Exec::parallel);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].pass == b.entries[i].pass);
    CHECK(a.entries[i].eigenvalue == b.entries[i].eigenvalue);
  }
}

TEST_CASE("operator is linear") {
  Sym s;
  auto p = s.params();
  auto op = aw_operator(p);
  LaurentPoly f = aw_polynomial(2, p), g = aw_polynomial(1, p) * s.v("q");
  CHECK(apply_qdiff(op, f + g) == apply_qdiff(op, f) + apply_qdiff(op, g));
}

TEST_CASE("truncated orthogonality with a rigorous tail bound") {
  auto t = make_vars({"z"});
  auto p = numeric(t, ExactScalar(1, 2), ExactScalar(1, 2), ExactScalar(-1, 3), ExactScalar(1, 5), ExactScalar(1, 7));
  for (int n = 0; n <= 3; ++n)
    for (int m = n + 1; m <= 3; ++m) {
      auto r = aw_orthogonality_check(n, m, p, 40);
      CHECK_MESSAGE(r.below_bound(), "n = ", n, " m = ", m);
      CHECK(r.bound < ExactScalar(1, 100000));
    }
  CHECK(aw_orthogonality_check(1, 1, p, 40).positive());
}

TEST_CASE("orthogonality: total mass matches the closed form") {
  auto t = make_vars({"z"});
  auto zero = numeric(t, ExactScalar(1, 2), 0, 0, 0, 0);
  auto r0 = aw_orthogonality_check(0, 0, zero, 30);
  CHECK(std::abs(mp_to_double(r0.value) - 2 / poch_inf(0.5, 0.5)) <= mp_to_double(r0.bound) + 1e-12);

  double q = 0.5, a = 0.5, b = -1.0 / 3, c = 0.2, d = 1.0 / 7;
  auto p = numeric(t, ExactScalar(1, 2), ExactScalar(1, 2), ExactScalar(-1, 3), ExactScalar(1, 5), ExactScalar(1, 7));
  auto r = aw_orthogonality_check(0, 0, p, 40);
  double mass = 2 * poch_inf(a * b * c * d, q) /
                (poch_inf(q, q) * poch_inf(a * b, q) * poch_inf(a * c, q) * poch_inf(a * d, q) *
                 poch_inf(b * c, q) * poch_inf(b * d, q) * poch_inf(c * d, q));
  CHECK(std::abs(mp_to_double(r.value) - mass) <= mp_to_double(r.bound) + 1e-12);
}

TEST_CASE("orthogonality input validation") {
  auto t = make_vars({"z"});
  CHECK_THROWS_AS(aw_orthogonality_check(0, 1, numeric(t, ExactScalar(1, 2), 1, 0, 0, 0), 20), std::domain_error);
  CHECK_THROWS_AS(aw_orthogonality_check(0, 1, numeric(t, 2, 0, 0, 0, 0), 20), std::domain_error);
  CHECK_THROWS(aw_orthogonality_check(0, 1, numeric(t, ExactScalar(1, 2), 0, 0, 0, 0), 0));
}
