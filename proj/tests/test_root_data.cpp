#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qsymm/root_system.hpp"

using namespace qsymm;

namespace {

VarTablePtr xtable(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_vars(names);
}

std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

LaurentPoly monomial_of(const VarTablePtr& t, const WeightVec& w) {
  Monomial m;
  for (std::size_t i = 0; i < w.size(); ++i) m.exp[i] = w[i];
  return LaurentPoly::monomial(t, m, 1);
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(make_root_system(RootKind::A, 1)).size() == 2);
  CHECK(weyl_group(make_root_system(RootKind::A, 3)).size() == 24);
  CHECK(weyl_group(make_root_system(RootKind::B, 3)).size() == 48);
  CHECK(weyl_group(make_root_system(RootKind::C, 2)).size() == 8);
  CHECK(weyl_group(make_root_system(RootKind::BC, 2)).size() == 8);
  CHECK(weyl_group(make_root_system(RootKind::D, 3)).size() == 24);
  CHECK(weyl_group(make_root_system(RootKind::D, 4)).size() == 192);
  CHECK(make_root_system(RootKind::BC, 2).positive_roots.size() == 6);
  CHECK(parse_root_system("BC2").label() == "BC2");
  CHECK_THROWS(parse_root_system("E6"));
}

TEST_CASE("orbit_sum examples") {
  auto a1 = make_root_system(RootKind::A, 1);
  auto t2 = xtable(2);
  auto x1 = LaurentPoly::variable(t2, 0), x2 = LaurentPoly::variable(t2, 1);
  CHECK(orbit_sum(a1, {1, 0}, t2, {0, 1}) == x1 + x2);
  auto bc1 = make_root_system(RootKind::BC, 1);
  auto t1 = xtable(1);
  CHECK(orbit_sum(bc1, {0}, t1, {0}) == LaurentPoly(t1, 1));
  auto bc2 = make_root_system(RootKind::BC, 2);
  auto expect = x1 + x2 + LaurentPoly::variable(t2, 0, -1) + LaurentPoly::variable(t2, 1, -1);
  CHECK(orbit_sum(bc2, {1, 0}, t2, {0, 1}) == expect);
  CHECK_THROWS(orbit_sum(a1, {0, 1}, t2, {0, 1}));
}

TEST_CASE("orbit sums agree with brute-force signed permutations") {
  for (int l = 1; l <= 3; ++l) {
    auto rs = make_root_system(RootKind::BC, l);
    auto t = xtable(static_cast<std::size_t>(l));
    WeightVec lam(static_cast<std::size_t>(l), 0);
    lam[0] = 2;
    if (l > 1) lam[1] = 1;
    std::set<WeightVec> orbit;
    std::vector<int> p(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      for (int signs = 0; signs < (1 << l); ++signs) {
        WeightVec w(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i)
          w[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = ((signs >> i) & 1 ? -1 : 1) * lam[static_cast<std::size_t>(i)];
        orbit.insert(w);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    LaurentPoly oracle(t);
    for (const auto& w : orbit) oracle += monomial_of(t, w);
    CHECK(orbit_sum(rs, lam, t, iota_vars(static_cast<std::size_t>(l))) == oracle);
  }
}

TEST_CASE("orbit sums are Weyl invariant and match monomial symmetric polynomials") {
  auto a2 = make_root_system(RootKind::A, 2);
  auto t = xtable(3);
  for (WeightVec lam : {WeightVec{2, 1, 0}, WeightVec{1, 1, 0}, WeightVec{3, 0, 0}}) {
    auto m = orbit_sum(a2, lam, t, {0, 1, 2});
    for (const auto& g : a2.weyl_generators) {
      auto moved = m.map_monomials([&](const Monomial& mono) {
        WeightVec w{mono.exp[0], mono.exp[1], mono.exp[2]};
        auto gw = g.apply(w);
        Monomial r;
        for (std::size_t i = 0; i < 3; ++i) r.exp[i] = gw[i];
        return r;
      });
      CHECK(moved == m);
    }
    // distinct permutations of the partition
    LaurentPoly oracle(t);
    WeightVec p = lam;
    std::sort(p.begin(), p.end());
    do oracle += monomial_of(t, p);
    while (std::next_permutation(p.begin(), p.end()));
    CHECK(m == oracle);
  }
}

TEST_CASE("dominance examples") {
  auto a1 = make_root_system(RootKind::A, 1);
  auto bc2 = make_root_system(RootKind::BC, 2);
  CHECK(dominance_leq(a1, {1, 0}, {1, 0}));
  CHECK(dominance_leq(bc2, {1, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq(bc2, {2, 0}, {1, 1}));
  CHECK_FALSE(dominance_leq(a1, {1, 1}, {1, 0}));  // different coordinate sums
}

TEST_CASE("dominant_weights_below examples") {
  auto a1 = make_root_system(RootKind::A, 1);
  CHECK(dominant_weights_below(a1, {2, 0}) == std::vector<WeightVec>{{1, 1}, {2, 0}});
  auto bc1 = make_root_system(RootKind::BC, 1);
  CHECK(dominant_weights_below(bc1, {2}) == std::vector<WeightVec>{{0}, {1}, {2}});
  auto c1 = make_root_system(RootKind::C, 1);
  CHECK(dominant_weights_below(c1, {2}) == std::vector<WeightVec>{{0}, {2}});
  for (auto rs : {make_root_system(RootKind::A, 2), make_root_system(RootKind::B, 2), make_root_system(RootKind::D, 3)}) {
    WeightVec zero(rs.dim(), 0);
    CHECK(dominant_weights_below(rs, zero) == std::vector<WeightVec>{zero});
  }
}

TEST_CASE("dominance is a partial order on random dominant triples") {
  std::mt19937 rng(1);
  auto rs = make_root_system(RootKind::BC, 3);
  std::uniform_int_distribution<int> d(0, 3);
  auto rnd = [&] {
    WeightVec w{d(rng), d(rng), d(rng)};
    std::sort(w.rbegin(), w.rend());
    return w;
  };
  for (int it = 0; it < 200; ++it) {
    auto a = rnd(), b = rnd(), c = rnd();
    if (dominance_leq(rs, a, b) && dominance_leq(rs, b, c)) CHECK(dominance_leq(rs, a, c));
    if (dominance_leq(rs, a, b) && dominance_leq(rs, b, a)) CHECK(a == b);
  }
  auto below = dominant_weights_below(rs, {2, 1, 0});
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j) CHECK_FALSE(dominance_leq(rs, below[j], below[i]));
}

TEST_CASE("multiplicities by root length are Weyl invariant") {
  auto rs = make_root_system(RootKind::BC, 2);
  set_multiplicity_by_length(rs, {{1, 3}, {2, 1}, {4, ExactScalar(1, 2)}});
  CHECK(multiplicity_is_weyl_invariant(rs));
  rs.multiplicity[{1, 0}] = 5;
  CHECK_FALSE(multiplicity_is_weyl_invariant(rs));
}
