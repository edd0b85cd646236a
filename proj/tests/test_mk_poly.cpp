#include <doctest.h>

#include <random>

#include "qsymm/mk_poly.hpp"
#include "qsymm/q_series.hpp"

using namespace qsymm;

namespace {

MKWeightSpec type_a(int rank, int k) {
  auto rs = make_root_system(RootKind::A, rank);
  set_multiplicity_by_length(rs, {{2, k}});
  auto t = mk_table(rs);
  return macdonald_spec(rs, t, LaurentPoly::variable(t, "q"));
}

LaurentPoly var(const MKWeightSpec& s, const char* n, int e = 1) { return LaurentPoly::variable(s.table, n, e); }

// a == e * b with e free of the torus variables
bool proportional(const LaurentPoly& a, const LaurentPoly& b, const std::vector<std::size_t>& x) {
  RatFunc r = RatFunc(a) / RatFunc(b);
  for (auto v : x)
    if (r.num().involves(v) || r.den().involves(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("build_weight examples") {
  auto s = type_a(1, 1);
  LaurentPoly one(s.table, 1), u = var(s, "x1") * var(s, "x2", -1), ui = var(s, "x2") * var(s, "x1", -1);
  CHECK(build_weight(s) == (one - u) * (one - ui));
  CHECK(build_weight(type_a(1, 0)) == one);
}

TEST_CASE("weights are Weyl- and inversion-invariant") {
  std::vector<MKWeightSpec> specs{type_a(2, 1), type_a(1, 2)};
  {
    auto rs = make_root_system(RootKind::C, 2);
    set_multiplicity_by_length(rs, {{2, 1}, {4, 2}});
    auto t = mk_table(rs);
    specs.push_back(macdonald_spec(rs, t, LaurentPoly::variable(t, "q")));
  }
  for (const auto& s : specs) {
    LaurentPoly d = build_weight(s);
    for (const auto& g : s.rs.weyl_generators) CHECK(weyl_act(d, g, s.x) == d);
    CHECK(d.invert_variables(s.x) == d);
  }
}

TEST_CASE("ct_inner_product examples") {
  auto s = type_a(1, 1);
  LaurentPoly one(s.table, 1);
  CHECK(ct_inner_product(one, one, one) == 1);
  LaurentPoly d = build_weight(s);
  LaurentPoly m0 = orbit_sum(s.rs, {0, 0}, s.table, s.x), m1 = orbit_sum(s.rs, {1, 0}, s.table, s.x);
  CHECK(ct_inner_product(m0, m0, d, s.x) == LaurentPoly(s.table, 2));
  CHECK(ct_inner_product(m1, m0, d, s.x).is_zero());
  LaurentPoly f = m1 * var(s, "q"), g = m1 + m0;
  CHECK(ct_inner_product(f, g, d, s.x) == ct_inner_product(g, f, d, s.x));
}

TEST_CASE("Gram-Schmidt examples for A1, k = 1") {
  auto s = type_a(1, 1);
  auto p0 = gram_schmidt_mk(s, {0, 0});
  CHECK(p0.numerator == LaurentPoly(s.table, 1) * p0.denominator);
  auto p1 = gram_schmidt_mk(s, {1, 0});
  CHECK(p1.numerator == (var(s, "x1") + var(s, "x2")) * p1.denominator);
  auto p2 = gram_schmidt_mk(s, {2, 0});
  REQUIRE(p2.basis.size() == 2);
  CHECK(p2.coeffs[0] == RatFunc(s.table, 1));  // t = q forces the Schur polynomial
  CHECK(p2.numerator == schur_polynomial({2, 0}, s.table, s.x) * p2.denominator);
}

TEST_CASE("k = 1 reproduces Schur polynomials (tableaux oracle)") {
  auto s = type_a(2, 1);
  LaurentPoly delta = build_weight(s);
  for (WeightVec lam : {WeightVec{2, 1, 0}, WeightVec{3, 0, 0}, WeightVec{2, 2, 0}}) {
    auto p = gram_schmidt_mk(s, lam, delta);
    CHECK_MESSAGE(p.numerator == schur_polynomial(lam, s.table, s.x) * p.denominator, weight_to_string(lam));
  }
  CHECK(schur_polynomial({1, 1, 0}, s.table, s.x) == orbit_sum(s.rs, {1, 1, 0}, s.table, s.x));
}

TEST_CASE("operator examples") {
  auto s = type_a(1, 1);
  auto op = macdonald_operator(s);
  CHECK(op.apply(LaurentPoly(s.table, 1)).is_zero());
  LaurentPoly m1 = orbit_sum(s.rs, {1, 0}, s.table, s.x);
  LaurentPoly dm = op.apply(m1);
  CHECK(proportional(dm, m1, s.x));
  std::mt19937 rng(2);
  auto s2 = type_a(1, 2);
  auto op2 = macdonald_operator(s2);
  for (int it = 0; it < 4; ++it) {
    std::uniform_int_distribution<int> c(-3, 3);
    LaurentPoly f = orbit_sum(s2.rs, {2, 0}, s2.table, s2.x) * ExactScalar(c(rng)) +
                    orbit_sum(s2.rs, {1, 1}, s2.table, s2.x) * var(s2, "q", c(rng));
    LaurentPoly g = orbit_sum(s2.rs, {2, 1}, s2.table, s2.x) * ExactScalar(c(rng)) +
                    orbit_sum(s2.rs, {1, 0}, s2.table, s2.x);
    CHECK(op2.apply(f + g) == op2.apply(f) + op2.apply(g));
  }
  CHECK_THROWS_WITH_AS(op2.apply(var(s2, "x1")), "D_σ output not polynomial", std::domain_error);
}

TEST_CASE("operator is self-adjoint") {
  auto s = type_a(1, 2);
  auto op = macdonald_operator(s);
  LaurentPoly d = build_weight(s);
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<WeightVec> ws{{1, 1}, {2, 0}, {0, 0}, {1, -1}};
  for (int it = 0; it < 3; ++it) {
    LaurentPoly f(s.table), g(s.table);
    for (const auto& w : ws) {
      f += orbit_sum(s.rs, dominant_representative(s.rs, w), s.table, s.x) * ExactScalar(c(rng));
      g += orbit_sum(s.rs, dominant_representative(s.rs, w), s.table, s.x) * ExactScalar(c(rng));
    }
    CHECK(ct_inner_product(op.apply(f), g, d, s.x) == ct_inner_product(f, op.apply(g), d, s.x));
  }
}

TEST_CASE("diagonalization: A1 degrees <= 3, symbolic q") {
  for (int k : {1, 2}) {
    auto s = type_a(1, k);
    std::vector<RatFunc> evs;
    for (WeightVec top : {WeightVec{2, 0}, WeightVec{3, 0}}) {
      auto rep = verify_mk_diagonalization(s, top);
      CHECK(rep.route == "gram-schmidt");
      CHECK(rep.all_pass());
      for (const auto& e : rep.eigen) evs.push_back(e.eigenvalue);
    }
    for (std::size_t i = 0; i < evs.size(); ++i)
      for (std::size_t j = i + 1; j < evs.size(); ++j) CHECK_FALSE(evs[i] == evs[j]);
  }
}

TEST_CASE("diagonalization: A2, k = 1, lambda <= (2,1,0)") {
  auto rep = verify_mk_diagonalization(type_a(2, 1), {2, 1, 0});
  CHECK(rep.all_pass());
  CHECK(rep.eigen.size() == 2);
  CHECK(rep.orth.size() == 1);
}

TEST_CASE("diagonalization: C2 with unequal root lengths") {
  auto rs = make_root_system(RootKind::C, 2);
  set_multiplicity_by_length(rs, {{2, 1}, {4, 2}});
  auto t = mk_table(rs);
  auto s = macdonald_spec(rs, t, LaurentPoly::variable(t, "q"));
  auto rep = verify_mk_diagonalization(s, {1, 1});
  CHECK(rep.all_pass());
}

TEST_CASE("koornwinder: telescoping weight and diagonalization") {
  auto rs = make_root_system(RootKind::BC, 2);
  auto t = mk_table(rs);
  LaurentPoly q = LaurentPoly::variable(t, "q"), one(t, 1);
  // base q^2, so the half-step factors are +-q
  std::array<RatFunc, 4> abcd{q * q, -one, q, -q.pow(3)};
  auto s = koornwinder_spec(2, t, q * q, abcd, 1);
  LaurentPoly d = build_weight(s);
  for (const auto& g : s.rs.weyl_generators) CHECK(weyl_act(d, g, s.x) == d);
  auto rep = verify_mk_diagonalization(s, {1, 0});
  CHECK(rep.route == "gram-schmidt");
  CHECK(rep.all_pass());
}

TEST_CASE("koornwinder: non-telescoping parameters") {
  auto t = make_vars({"x1", "q"});
  LaurentPoly q = LaurentPoly::variable(t, "q");
  RatFunc zero(t);
  auto s = koornwinder_spec(1, t, q, {RatFunc(q), zero, zero, zero}, 0);
  CHECK_THROWS_WITH_AS(build_weight(s), "weight not polynomial; use truncated mode", std::domain_error);

  // truncated mode agrees with the exact weight where both exist
  auto tn = make_vars({"x1", "q"});
  LaurentPoly qn(tn, ExactScalar(1, 4));
  std::array<RatFunc, 4> abcd{RatFunc(tn, ExactScalar(1, 4)), RatFunc(tn, ExactScalar(-1, 4)),
                              RatFunc(tn, ExactScalar(1, 2)), RatFunc(tn, ExactScalar(-1, 2))};
  auto sn = koornwinder_spec(1, tn, qn, abcd, 0);
  LaurentPoly x1 = LaurentPoly::variable(tn, "x1"), x1i = LaurentPoly::variable(tn, "x1", -1), onen(tn, 1);
  CHECK(build_weight(sn) == (onen - x1 * x1) * (onen - x1i * x1i));
  LaurentPoly diff = build_weight(sn) - build_weight_truncated(sn, 30);
  for (const auto& term : diff.terms()) CHECK(abs(term.coeff) < ExactScalar(1, 1000000));

  auto sa = koornwinder_spec(1, tn, qn, {RatFunc(tn, ExactScalar(1, 4)), RatFunc(tn), RatFunc(tn), RatFunc(tn)}, 0);
  LaurentPoly w = build_weight_truncated(sa, 20);
  CHECK(w.invert_variables(sa.x) == w);
  CHECK(w.constant_term() > 0);
}

TEST_CASE("BC1 koornwinder at the radial parameters matches Askey-Wilson") {
  auto rs = make_root_system(RootKind::BC, 1);
  auto t = mk_table(rs);
  LaurentPoly q = LaurentPoly::variable(t, "q");
  const int n = 3;
  std::array<RatFunc, 4> abcd{RatFunc(-q), RatFunc(-q), RatFunc(q), RatFunc(q.pow(2 * (n - 2) + 1))};
  auto s = koornwinder_spec(1, t, q * q, abcd, 0);
  auto rep = verify_mk_diagonalization(s, {3});
  CHECK(rep.route == "eigen");
  CHECK(rep.all_pass());
  auto aw = make_aw_params(abcd[0], abcd[1], abcd[2], abcd[3], q * q, "x1");
  auto rep2 = verify_mk_diagonalization(s, {2});
  for (const auto* r : {&rep, &rep2})
    for (const auto& p : r->polys) {
      int deg = p.lambda[0];
      LaurentPoly pn = aw_polynomial(deg, aw);
      LaurentPoly lead_aw = x_coefficient(pn, s.x, {deg}), lead_mk = x_coefficient(p.numerator, s.x, {deg});
      CHECK_MESSAGE(pn * lead_mk == p.numerator * lead_aw, "degree ", deg);
    }
}
