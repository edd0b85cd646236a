#include <doctest.h>

#include "qsymm/radial.hpp"

using namespace qsymm;

namespace {

RatFunc rv(const char* n, int e = 1) { return LaurentPoly::variable(radial_table(), n, e); }
RatFunc num(long a, long b = 1) { return RatFunc(radial_table(), ExactScalar(a, b)); }

}  // namespace

TEST_CASE("parameter map") {
  RatFunc q = rv("q"), s = rv("s"), t = rv("t");
  auto p2 = aw_params_from_sigma_tau(make_spherical_setup(2));
  CHECK(p2.a == -(s * t * q));
  CHECK(p2.b == -(q / (s * t)));
  CHECK(p2.c == s * q / t);
  CHECK(p2.d == t * q / s);
  CHECK(RatFunc(p2.base) == q * q);
  for (int n : {2, 3, 4, 5}) {
    auto p = aw_params_from_sigma_tau(make_spherical_setup(n));
    CHECK(p.a * p.b * p.c * p.d == q.pow(2 * n));
  }
  auto p0 = aw_params_from_sigma_tau(make_spherical_setup(4, "0", "0"));
  CHECK(p0.a == -q);
  CHECK(p0.b == -q);
  CHECK(p0.c == q);
  CHECK(p0.d == q.pow(5));
  CHECK_THROWS_AS(make_spherical_setup(3, "inf", "symbolic"), std::invalid_argument);
  CHECK_THROWS_AS(make_spherical_setup(1), std::invalid_argument);
  auto lit = make_spherical_setup(3, "=1/3", "2");
  CHECK(lit.s == num(1, 3));
  CHECK(lit.t == q * q);
}

TEST_CASE("radial operator on constants") {
  RatFunc q = rv("q");
  auto st = make_spherical_setup(2);
  auto op = radial_operator(st);
  CHECK(op.coeff_id == num(1) + q * q);
  LaurentPoly one(radial_table(), 1);
  for (int n : {2, 3, 4}) {
    auto s = make_spherical_setup(n);
    RatFunc geo(radial_table());
    for (int i = 0; i < n; ++i) geo += q.pow(2 * i);
    CHECK(RatFunc(apply_qdiff(radial_operator(s), one)) == geo);
    CHECK(radial_eigenvalue(n, 0, q) == geo);
  }
  CHECK(radial_eigenvalue(3, 0, q) == q.pow(4) + num(1) + q * q);
}

TEST_CASE("degree-1 spherical polynomial") {
  RatFunc q = rv("q");
  auto st = make_spherical_setup(3);
  auto p = aw_params_from_sigma_tau(st);
  LaurentPoly p1 = aw_polynomial(1, p);
  RatFunc ev = q.pow(6) + q.pow(-2) + q * q;
  CHECK(RatFunc(apply_qdiff(radial_operator(st), p1)) == ev * RatFunc(p1));
}

TEST_CASE("bridge identity n = 2..5, l = 0..5") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 0; l <= 5; ++l) CHECK_MESSAGE(bridge_identity_holds(n, l), "n=", n, " l=", l);
}

TEST_CASE("spherical identification, symbolic s and t") {
  for (int n = 2; n <= 4; ++n) {
    auto rep = verify_spherical_identification(make_spherical_setup(n), 4);
    REQUIRE(rep.entries.size() == 5);
    for (const auto& e : rep.entries) {
      CHECK_MESSAGE(e.pass, "n=", n, " l=", e.l);
      CHECK(e.bridge_pass);
    }
  }
}

TEST_CASE("spherical identification at sample points, serial and parallel") {
  for (const char* s : {"=1", "=2", "=1/3"})
    for (const char* t : {"=1", "=2", "=1/3"}) {
      auto st = make_spherical_setup(3, s, t);
      auto a = verify_spherical_identification(st, 3, Exec::serial);
      auto b = verify_spherical_identification(st, 3, Exec::parallel);
      CHECK(a.all_pass());
      CHECK(b.all_pass());
      for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].eigenvalue == b.entries[i].eigenvalue);
    }
}

TEST_CASE("perturbed operator is caught") {
  auto st = make_spherical_setup(2);
  auto op = radial_operator(st);
  op.coeff_up = op.coeff_up * (num(1) + rv("q"));
  op.coeff_down = op.coeff_up.invert_variables(std::array<std::size_t, 1>{st.z});
  auto rep = verify_spherical_identification(st, op, 2);
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.entries[0].pass);  // constants do not see the shift coefficients
  CHECK_FALSE(rep.entries[1].pass);
  CHECK_FALSE(rep.entries[1].residual.is_zero());
}

TEST_CASE("D preserves symmetry") {
  auto st = make_spherical_setup(3);
  LaurentPoly z = LaurentPoly::variable(radial_table(), "z"), zi = LaurentPoly::variable(radial_table(), "z", -1);
  std::array<std::size_t, 1> zs{st.z};
  for (const LaurentPoly& f : {z + zi, z * z + zi * zi + LaurentPoly(radial_table(), 3), (z + zi) * (z + zi) * (z + zi)}) {
    LaurentPoly g = apply_qdiff(radial_operator(st), f);
    CHECK(g.invert_variables(zs) == g);
  }
}

TEST_CASE("BC1 Koornwinder operator matches D up to scale and constant") {
  for (int n : {2, 3}) {
    auto cmp = compare_rank_one_koornwinder(make_spherical_setup(n));
    CHECK(cmp.pass);
    MESSAGE("factor: ", cmp.factor.to_string());
  }
  auto cmp = compare_rank_one_koornwinder(make_spherical_setup(3, "=2", "=1/3"));
  CHECK(cmp.pass);
}

TEST_CASE("Table I") {
  CHECK(table1().size() == 10);
  CHECK(table1_case(3).multiplicities == "2(n-2l), 2, 1");
  CHECK(table1_case(2).sigma == "A_l");
  CHECK_THROWS_AS(table1_case(11), std::invalid_argument);

  auto c1 = multiplicities_to_parameters(1, 3);
  CHECK(c1.kind == RootKind::A);
  CHECK(c1.rank == 2);
  CHECK(c1.m.at(2) == 1);
  CHECK(c1.k.at(2) == ExactScalar(1, 2));
  CHECK_FALSE(c1.spec.has_value());

  auto c2 = multiplicities_to_parameters(2, 3);
  CHECK(c2.m.at(2) == 4);
  REQUIRE(c2.spec.has_value());
  CHECK_FALSE(c2.spec->heuristic);
  for (const auto& [a, k] : c2.spec->rs.multiplicity) CHECK(k == 2);
  auto rep = verify_mk_diagonalization(*c2.spec, {1, 0, 0});
  CHECK(rep.all_pass());

  auto c3 = multiplicities_to_parameters(3, 5, 2);
  CHECK(c3.kind == RootKind::BC);
  CHECK(c3.m.at(1) == 2);
  CHECK(c3.m.at(2) == 2);
  CHECK(c3.m.at(4) == 1);
  CHECK_FALSE(c3.spec.has_value());
  CHECK_FALSE(multiplicities_to_parameters(3, 5, 2, true).spec.has_value());  // k_long = 1/2

  auto c4 = multiplicities_to_parameters(4, 3, 2);
  CHECK(c4.m.at(1) == 3);
  CHECK(c4.m.at(2) == 1);
  CHECK_FALSE(c4.note.empty());

  CHECK(multiplicities_to_parameters(9, 4).rank == 2);
  CHECK_THROWS_AS(multiplicities_to_parameters(9, 5), std::invalid_argument);
  CHECK_THROWS_AS(multiplicities_to_parameters(3, 4, 3), std::invalid_argument);
  for (int c = 1; c <= 10; ++c) {
    int n = c == 9 ? 4 : c == 10 ? 5 : 4;
    auto inst = multiplicities_to_parameters(c, n, 1);
    if (inst.spec) CHECK(multiplicity_is_weyl_invariant(inst.spec->rs));
  }
}
