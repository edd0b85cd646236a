#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qsymm/laurent_poly.hpp"

namespace qsymm {

namespace {

using Dense = std::vector<LaurentPoly>;  // coefficients by degree in the main variable

LaurentPoly monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const ExactScalar& lc = p.leading().coeff;
  if (lc == 1) return p;
  return p * ExactScalar(1 / lc);
}

LaurentPoly one_like(const LaurentPoly& p) { return LaurentPoly(p.table(), 1); }

Dense to_dense(const LaurentPoly& p, std::size_t x) {
  Dense d(static_cast<std::size_t>(p.degree(x)) + 1, LaurentPoly(p.table()));
  std::vector<std::vector<Term>> buckets(d.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    auto e = static_cast<std::size_t>(m.exp[x]);
    m.exp[x] = 0;
    buckets[e].push_back({m, t.coeff});
  }
  for (std::size_t e = 0; e < d.size(); ++e)
    d[e] = LaurentPoly::from_sorted_terms(p.table(), std::move(buckets[e]));
  return d;
}

LaurentPoly from_dense(const Dense& d, std::size_t x, const VarTablePtr& table) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < d.size(); ++e)
    for (const auto& t : d[e].terms()) {
      Monomial m = t.mono;
      m.exp[x] = static_cast<Exponent>(e);
      out.push_back({m, t.coeff});
    }
  return LaurentPoly::from_terms(table, std::move(out));
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content(const Dense& d) {
  LaurentPoly g(d.front().table());
  for (const auto& c : d) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd_rec(g, c);
    if (g.is_constant()) return one_like(c);
  }
  return g;
}

Dense primitive(Dense d) {
  LaurentPoly c = content(d);
  if (!c.is_constant()) {
    for (auto& e : d)
      if (!e.is_zero()) e = divide_exact(e, c, "content does not divide coefficient");
  }
  // scale so that the leading coefficient polynomial is monic over Q
  ExactScalar s = 1 / d.back().leading().coeff;
  if (s != 1)
    for (auto& e : d) e *= s;
  return d;
}

// Pseudo-remainder of a by b in the main variable (b's degree <= a's).
Dense prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const LaurentPoly& lcb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    LaurentPoly lca = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a)
      if (!c.is_zero()) c = c * lcb;
    for (std::size_t i = 0; i <= db; ++i)
      if (!b[i].is_zero()) a[i + shift] -= lca * b[i];
    trim(a);
  }
  return a;
}

// Univariate Euclid over Q with monic normalization.
LaurentPoly univariate_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t x) {
  auto dense = [&](const LaurentPoly& p) {
    std::vector<ExactScalar> v(static_cast<std::size_t>(p.degree(x)) + 1, 0);
    for (const auto& t : p.terms()) v[static_cast<std::size_t>(t.mono.exp[x])] = t.coeff;
    return v;
  };
  auto u = dense(a), w = dense(b);
  if (u.size() < w.size()) std::swap(u, w);
  while (!w.empty()) {
    ExactScalar inv = 1 / w.back();
    for (auto& c : w) c *= inv;
    while (u.size() >= w.size()) {
      ExactScalar f = u.back();
      std::size_t shift = u.size() - w.size();
      if (f != 0)
        for (std::size_t i = 0; i < w.size(); ++i) u[i + shift] -= f * w[i];
      u.pop_back();
      while (!u.empty() && u.back() == 0) u.pop_back();
    }
    std::swap(u, w);
  }
  std::vector<Term> out;
  ExactScalar inv = 1 / u.back();
  for (std::size_t e = u.size(); e-- > 0;) {
    if (u[e] == 0) continue;
    Monomial m;
    m.exp[x] = static_cast<Exponent>(e);
    out.push_back({m, u[e] * inv});
  }
  return LaurentPoly::from_sorted_terms(a.table(), std::move(out));
}

// gcd of two nonzero polynomials without monomial factors.
LaurentPoly gcd_nomono(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (b.size() <= a.size()) {
    if (poly_divexact(a, b)) return monic(b);
  } else if (poly_divexact(b, a)) {
    return monic(a);
  }
  std::uint32_t ma = a.var_mask(), mb = b.var_mask();
  if (ma != mb) {
    // a variable present in only one operand: the gcd lives in its coefficients
    std::uint32_t only = (ma & ~mb) ? (ma & ~mb) : (mb & ~ma);
    const LaurentPoly& with = (ma & ~mb) ? a : b;
    const LaurentPoly& without = (ma & ~mb) ? b : a;
    auto y = static_cast<std::size_t>(__builtin_ctz(only));
    LaurentPoly g = without;
    for (const auto& c : to_dense(with, y)) {
      if (c.is_zero()) continue;
      g = gcd_rec(g, c);
      if (g.is_constant()) return one_like(a);
    }
    return monic(g);
  }
  if (__builtin_popcount(ma) == 1) return univariate_gcd(a, b, static_cast<std::size_t>(__builtin_ctz(ma)));

  std::size_t x = 0;
  Exponent best = -1;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(ma & (1u << v))) continue;
    Exponent d = std::max(a.degree(v), b.degree(v));
    if (best < 0 || d < best) {
      best = d;
      x = v;
    }
  }
  Dense da = to_dense(a, x), db = to_dense(b, x);
  LaurentPoly ca = content(da), cb = content(db);
  LaurentPoly gc = gcd_rec(ca, cb);
  Dense pa = primitive(std::move(da)), pb = primitive(std::move(db));
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (true) {
    Dense r = prem(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) {
      pb = Dense{one_like(a)};
      break;
    }
    pa = std::move(pb);
    pb = primitive(std::move(r));
  }
  LaurentPoly g = from_dense(pb, x, a.table());
  return monic(gc * g);
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  auto sa = split_monomial(a);
  auto sb = split_monomial(b);
  Monomial m = Monomial::min(sa.mono, sb.mono);
  return gcd_nomono(sa.rest, sb.rest).mul_monomial(m, 1);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return monic(split_monomial(b).rest);
  if (b.is_zero()) return monic(split_monomial(a).rest);
  return gcd_nomono(split_monomial(a).rest, split_monomial(b).rest);
}

}  // namespace qsymm
