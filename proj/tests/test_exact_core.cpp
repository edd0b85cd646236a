#include <doctest.h>

#include <random>

#include "qsymm/poly_matrix.hpp"
#include "qsymm/serialize.hpp"

using namespace qsymm;

namespace {

struct Vars {
  VarTablePtr t = make_vars({"q", "s", "z"});
  LaurentPoly q = LaurentPoly::variable(t, "q");
  LaurentPoly s = LaurentPoly::variable(t, "s");
  LaurentPoly z = LaurentPoly::variable(t, "z");
  LaurentPoly one = LaurentPoly(t, 1);
  LaurentPoly c(long v) const { return LaurentPoly(t, v); }
  LaurentPoly zi() const { return LaurentPoly::variable(t, "z", -1); }
};

LaurentPoly random_poly(std::mt19937& rng, const VarTablePtr& t, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> e(lo, hi), c(-5, 5);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    Term term;
    for (std::size_t v = 0; v < t->size(); ++v) term.mono.exp[v] = e(rng);
    term.coeff = ExactScalar(c(rng), 1 + std::abs(c(rng)));
    term.coeff.canonicalize();
    ts.push_back(term);
  }
  return LaurentPoly::from_terms(t, ts);
}

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("6/4") == ExactScalar(3, 2));
  CHECK(to_string(parse_scalar("-10/4")) == "-5/2");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("abc"));
  CHECK(scalar_pow(ExactScalar(2, 3), -2) == ExactScalar(9, 4));
}

TEST_CASE("var table rejects duplicates") {
  CHECK_THROWS(make_vars({"q", "q"}));
  auto t = make_vars({"q", "z"});
  CHECK(t->index("z") == 1);
  CHECK_THROWS(t->index("w"));
}

TEST_CASE("poly_arith examples") {
  Vars v;
  CHECK((v.one + v.z) * (v.one - v.z) == v.one - v.z * v.z);
  CHECK(v.z * v.zi() == v.one);
  CHECK(((v.one - v.q * v.z * v.z) * v.c(0)).is_zero());
  CHECK(poly_arith(v.z, v.q, PolyOp::sub) == v.z - v.q);
  auto other = make_vars({"q", "s", "w"});
  CHECK_THROWS_AS(v.z + LaurentPoly::variable(other, "w"), std::invalid_argument);
}

TEST_CASE("poly_divexact examples") {
  Vars v;
  auto q1 = poly_divexact(v.one - v.z * v.z, v.one - v.z);
  REQUIRE(q1);
  CHECK(*q1 == v.one + v.z);
  CHECK_FALSE(poly_divexact(v.one, v.one - v.z));
  auto q2 = poly_divexact(v.zi() - v.z, v.one - v.z);
  REQUIRE(q2);
  CHECK(*q2 * (v.one - v.z) == v.zi() - v.z);  // multiply back
  CHECK(*q2 == v.zi() + v.one);
  CHECK_THROWS(poly_divexact(v.one, v.c(0)));
}

TEST_CASE("ring axioms and division on random samples") {
  std::mt19937 rng(7);
  auto t = make_vars({"a", "b", "c"});
  for (int it = 0; it < 30; ++it) {
    auto a = random_poly(rng, t, 5, -2, 2), b = random_poly(rng, t, 4, -2, 2), c = random_poly(rng, t, 3, -1, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    ExactScalar sum = (a * b).coefficient_sum();
    CHECK(sum == a.coefficient_sum() * b.coefficient_sum());
    if (!b.is_zero()) {
      auto q = poly_divexact(a * b, b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("parallel multiplication agrees with the serial kernel") {
  std::mt19937 rng(11);
  auto t = make_vars({"a", "b", "c", "d"});
  for (int it = 0; it < 5; ++it) {
    auto a = random_poly(rng, t, 300, -4, 4), b = random_poly(rng, t, 250, -4, 4);
    CHECK(kernels::multiply_parallel(a, b) == kernels::multiply_serial(a, b));
  }
}

TEST_CASE("gcd and rational function canonical form") {
  Vars v;
  auto f = (v.one - v.q * v.z) * (v.one + v.s * v.s * v.z);
  auto g = (v.one - v.q * v.z) * (v.one - v.s);
  CHECK(poly_gcd(f, g) == poly_gcd(v.one - v.q * v.z, v.one - v.q * v.z));
  CHECK(poly_gcd(f * v.z, g * v.zi()).leading().coeff == 1);

  RatFunc r(f, g * v.z * v.c(3));
  CHECK(r.den() == v.s - v.one);  // lex-leading coefficient normalized to 1
  CHECK(r * RatFunc(g * v.z * v.c(3)) == RatFunc(f));
  RatFunc again(r.num(), r.den());
  CHECK(again == r);  // idempotent
  RatFunc x(v.one, v.one - v.z), y(v.one, v.one + v.z);
  CHECK(x + y == RatFunc(v.c(2), v.one - v.z * v.z));
  CHECK((x - x).is_zero());
  CHECK(x.inverse() * x == RatFunc(v.one));
  CHECK_THROWS(RatFunc(v.one, v.c(0)));
}

TEST_CASE("multivariate gcd on random products") {
  std::mt19937 rng(3);
  auto t = make_vars({"a", "b", "c"});
  for (int it = 0; it < 15; ++it) {
    auto common = random_poly(rng, t, 3, 0, 2);
    auto a = random_poly(rng, t, 3, 0, 2), b = random_poly(rng, t, 3, 0, 2);
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    auto g = poly_gcd(common * a, common * b);
    CHECK(poly_divexact(common * a, g));
    CHECK(poly_divexact(common * b, g));
    CHECK(poly_divexact(g, split_monomial(common).rest));
  }
}

TEST_CASE("mat_nullspace examples") {
  Vars v;
  auto id = PolyMatrix::identity(v.t, 3);
  CHECK(id.nullspace().empty());
  PolyMatrix zero(v.t, 2, 2);
  CHECK(zero.nullspace().size() == 2);
  PolyMatrix m(v.t, 2, 2);
  m(0, 0) = v.one;
  m(0, 1) = v.z;
  m(1, 0) = v.zi();
  m(1, 1) = v.one;
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  for (const auto& e : m.apply(ns[0])) CHECK(e.is_zero());
  CHECK(m.rank() == 1);
}

TEST_CASE("rank plus nullity equals columns; inverse is exact") {
  std::mt19937 rng(5);
  auto t = make_vars({"q", "z"});
  for (int it = 0; it < 8; ++it) {
    std::size_t r = 2 + it % 3, c = 3 + it % 2;
    PolyMatrix m(t, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = random_poly(rng, t, 2, -1, 1);
    if (it % 2) {  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * RatFunc(LaurentPoly::variable(t, "q")) + m(1, j);
    }
    auto ns = m.nullspace();
    CHECK(m.rank() + ns.size() == c);
    for (const auto& v : ns)
      for (const auto& e : m.apply(v)) CHECK(e.is_zero());
    PolyMatrix sq(t, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) sq(i, j) = random_poly(rng, t, 2, -1, 1);
    if (auto inv = sq.inverse()) CHECK(sq * *inv == PolyMatrix::identity(t, 3));
  }
}

TEST_CASE("matrix products: associativity and serial/parallel agreement") {
  std::mt19937 rng(9);
  auto t = make_vars({"q", "z"});
  auto rnd = [&](std::size_t n) {
    PolyMatrix m(t, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, t, 2, -1, 1);
    return m;
  };
  auto a = rnd(4), b = rnd(4), c = rnd(4);
  CHECK((a * b) * c == a * (b * c));
  CHECK(kernels::matmul_parallel(a, b) == kernels::matmul_serial(a, b));
  CHECK(kron(a, b).rows() == 16);
}

TEST_CASE("serialization round trip is bit-exact") {
  Vars v;
  auto p = (v.one - v.q * v.zi()) * (v.s * ExactScalar(2, 3) + v.z);
  Json j = poly_to_json(p);
  CHECK(poly_from_json(j, v.t) == p);
  CHECK(poly_to_json(poly_from_json(Json::parse(j.dump()))).dump() == j.dump());
  PolyMatrix m(v.t, 1, 2);
  m(0, 0) = RatFunc(v.one, v.one - v.q);
  m(0, 1) = v.z;
  CHECK(matrix_from_json(matrix_to_json(m), v.t) == m);
  CHECK(poly_to_csv(v.one).rfind("q,s,z,num,den\n", 0) == 0);
}
