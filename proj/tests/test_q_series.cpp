#include <doctest.h>

#include <algorithm>

#include "qsymm/q_series.hpp"

using namespace qsymm;

namespace {

struct Sym {
  VarTablePtr t = make_vars({"a", "b", "c", "d", "q", "z"});
  LaurentPoly v(const char* n, int e = 1) const { return LaurentPoly::variable(t, n, e); }
  LaurentPoly one() const { return LaurentPoly(t, 1); }
  AWParams params() const { return make_aw_params(v("a"), v("b"), v("c"), v("d"), v("q")); }
};

}  // namespace

TEST_CASE("q_pochhammer examples") {
  Sym s;
  RatFunc a = s.v("a"), q = s.v("q"), one = s.one();
  CHECK(q_pochhammer(a, q, 0) == one);
  CHECK(q_pochhammer(a, q, 2) == (one - a) * (one - a * q));
  CHECK(q_pochhammer(q, q, 3) == (one - q) * (one - q * q) * (one - q * q * q));
  CHECK_THROWS(q_pochhammer(a, q, -1));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(a * q.pow(m), q, n));
}

TEST_CASE("phi_4_3 terminating examples") {
  auto t = make_vars({"a2", "a3", "a4", "b1", "b2", "b3", "q"});
  auto v = [&](const char* n) { return RatFunc(LaurentPoly::variable(t, n)); };
  RatFunc one(t, 1), q = v("q");
  std::array<RatFunc, 3> up{v("a2"), v("a3"), v("a4")}, lo{v("b1"), v("b2"), v("b3")};
  CHECK(phi_4_3_terminating(0, up, lo, q, q) == one);
  RatFunc expect = one + (one - q.pow(-1)) * (one - up[0]) * (one - up[1]) * (one - up[2]) * q /
                             ((one - lo[0]) * (one - lo[1]) * (one - lo[2]) * (one - q));
  CHECK(phi_4_3_terminating(1, up, lo, q, q) == expect);
  std::array<RatFunc, 3> lo2{up[0], lo[1], lo[2]};
  RatFunc expect2 = one + (one - q.pow(-1)) * (one - up[1]) * (one - up[2]) * q /
                              ((one - lo[1]) * (one - lo[2]) * (one - q));
  CHECK(phi_4_3_terminating(1, up, lo2, q, q) == expect2);
  std::array<RatFunc, 3> bad{q.pow(-1), lo[1], lo[2]};
  CHECK_THROWS_WITH_AS(phi_4_3_terminating(3, up, bad, q, q), doctest::Contains("b1"), std::domain_error);
}

TEST_CASE("aw_polynomial degree 0 and 1") {
  Sym s;
  auto p = s.params();
  CHECK(aw_polynomial(0, p) == s.one());
  LaurentPoly a = s.v("a"), b = s.v("b"), c = s.v("c"), d = s.v("d"), z = s.v("z"), zi = s.v("z", -1);
  LaurentPoly one = s.one();
  // k=0 and k=1 terms written out; (1-q^{-1}) q / (1-q) = -1
  LaurentPoly expect = s.v("a", -1) * ((one - a * b) * (one - a * c) * (one - a * d) -
                                       (one - a * b * c * d) * (one - a * z) * (one - a * zi));
  CHECK(aw_polynomial(1, p) == expect);
}

TEST_CASE("aw_polynomial is z-symmetric and agrees with the rational 4phi3") {
  Sym s;
  auto p = s.params();
  std::size_t zv = s.t->index("z");
  std::array<std::size_t, 1> zs{zv};
  for (int n = 0; n <= 3; ++n) {
    auto pn = aw_polynomial(n, p);
    CHECK(pn.invert_variables(zs) == pn);
    auto r = aw_polynomial_r(n, p);
    RatFunc q = s.v("q"), a = s.v("a"), b = s.v("b"), c = s.v("c"), d = s.v("d"), z = s.v("z");
    RatFunc phi = phi_4_3_terminating(n, {a * b * c * d * q.pow(n - 1), a * z, a / z}, {a * b, a * c, a * d}, q, q);
    CHECK(r.value() == phi);
    // the 4phi3 equals 1 at z = a
    CHECK(r.scale * RatFunc(r.body.substitute_unit(zv, s.v("a"))) == RatFunc(s.one()));
  }
}

TEST_CASE("aw_polynomial parameter permutation invariance") {
  Sym s;
  auto p = s.params();
  std::array<int, 4> perm{0, 1, 2, 3};
  for (int n = 0; n <= 3; ++n) {
    auto base = aw_polynomial(n, p);
    auto list = p.list();
    std::sort(perm.begin(), perm.end());
    do {
      std::array<RatFunc, 4> permuted{list[static_cast<std::size_t>(perm[0])], list[static_cast<std::size_t>(perm[1])],
                                      list[static_cast<std::size_t>(perm[2])], list[static_cast<std::size_t>(perm[3])]};
      CHECK(aw_polynomial(n, with_parameters(p, permuted)) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto swapped = with_parameters(p, {p.b, p.a, p.d, p.c});
  CHECK(aw_polynomial(2, swapped) == aw_polynomial(2, p));
}

TEST_CASE("aw_polynomial with numeric parameters and zero first parameter") {
  auto t = make_vars({"q", "z"});
  LaurentPoly q = LaurentPoly::variable(t, "q");
  auto p = make_aw_params(RatFunc(t, 0), RatFunc(t, ExactScalar(1, 3)), RatFunc(t, ExactScalar(-1, 5)),
                          RatFunc(t, ExactScalar(1, 7)), q);
  auto p_moved = make_aw_params(RatFunc(t, ExactScalar(1, 3)), RatFunc(t, 0), RatFunc(t, ExactScalar(-1, 5)),
                                RatFunc(t, ExactScalar(1, 7)), q);
  CHECK(aw_polynomial(2, p) == aw_polynomial(2, p_moved));
  auto zero = make_aw_params(RatFunc(t, 0), RatFunc(t, 0), RatFunc(t, 0), RatFunc(t, 0), q);
  CHECK_THROWS(aw_polynomial(1, zero));
  CHECK_THROWS(make_aw_params(RatFunc(t, 0), RatFunc(t, 0), RatFunc(t, 0), RatFunc(t, 0), LaurentPoly(t, 1)));
}
