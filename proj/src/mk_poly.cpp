#include "qsymm/mk_poly.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace qsymm {

namespace {

const char* kNotPolynomial = "weight not polynomial; use truncated mode";

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_constant()) return a;
  if (a.is_constant()) return b;
  return a * divide_exact(b, poly_gcd(a, b), "internal: gcd does not divide");
}

LaurentPoly x_power(const VarTablePtr& t, const std::vector<std::size_t>& x, const WeightVec& w) {
  Monomial m;
  for (std::size_t i = 0; i < w.size(); ++i) m.exp[x[i]] = w[i];
  return LaurentPoly::monomial(t, m, 1);
}

LaurentPoly unit_pow(const LaurentPoly& base, int e) {
  if (e >= 0) return base.pow(static_cast<unsigned>(e));
  const Term& b = base.leading();
  Monomial inv = Monomial{} / b.mono;
  return LaurentPoly::monomial(base.table(), inv, 1 / b.coeff).pow(static_cast<unsigned>(-e));
}

// (y; p)_n
LaurentPoly poch(const LaurentPoly& y, const LaurentPoly& p, int n) {
  LaurentPoly one(y.table(), 1), r = one, pk = one;
  for (int i = 0; i < n; ++i) {
    r *= one - pk * y;
    pk *= p;
  }
  return r;
}

// m with e == base^m, if any.
std::optional<int> base_power(const LaurentPoly& e, const LaurentPoly& base) {
  if (!e.is_single_term()) return std::nullopt;
  const Term& b = base.leading();
  const Term& t = e.leading();
  int m = 0;
  bool found = false;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (b.mono.exp[v] == 0) continue;
    if (t.mono.exp[v] % b.mono.exp[v] != 0) return std::nullopt;
    m = t.mono.exp[v] / b.mono.exp[v];
    found = true;
    break;
  }
  if (found) {
    if (unit_pow(base, m) == e) return m;
    return std::nullopt;
  }
  for (int k = -256; k <= 256; ++k)
    if (unit_pow(base, k) == e) return k;
  return std::nullopt;
}

std::optional<ExactScalar> rational_sqrt(const ExactScalar& c) {
  if (c < 0) return std::nullopt;
  mpz_class n = c.get_num(), d = c.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return ExactScalar(rn, rd);
}

std::optional<LaurentPoly> unit_sqrt(const LaurentPoly& base) {
  const Term& b = base.leading();
  Monomial h;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (b.mono.exp[v] % 2 != 0) return std::nullopt;
    h.exp[v] = b.mono.exp[v] / 2;
  }
  auto c = rational_sqrt(b.coeff);
  if (!c) return std::nullopt;
  return LaurentPoly::monomial(base.table(), h, *c);
}

ExactScalar rational_constant(const RatFunc& r, const char* what) {
  if (!r.is_constant()) throw std::invalid_argument(what);
  return r.num().constant_term();
}

ExactScalar integer_multiplicity(const RootSystemData& rs, const WeightVec& a) {
  auto it = rs.multiplicity.find(a);
  if (it == rs.multiplicity.end()) return 0;
  return it->second;
}

std::vector<std::size_t> torus_vars(const RootSystemData& rs, const VarTablePtr& t) {
  std::vector<std::size_t> x;
  for (std::size_t i = 0; i < rs.dim(); ++i) x.push_back(t->index("x" + std::to_string(i + 1)));
  return x;
}

void require_unit(const LaurentPoly& base) {
  if (!base.is_single_term()) throw std::invalid_argument("base must be a single-term unit");
  if (base.is_constant() && (base.constant_term() == 1 || base.constant_term() == -1))
    throw std::invalid_argument("base must not be +-1");
}

}  // namespace

VarTablePtr mk_table(const RootSystemData& rs, const std::vector<std::string>& extra) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rs.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("q");
  for (const auto& e : extra) names.push_back(e);
  return make_vars(names);
}

MKWeightSpec macdonald_spec(RootSystemData rs, VarTablePtr table, LaurentPoly base) {
  require_unit(base);
  for (const auto& a : rs.positive_roots) {
    ExactScalar k = integer_multiplicity(rs, a);
    if (k.get_den() != 1 || k < 0)
      throw std::invalid_argument("macdonald multiplicities must be non-negative integers");
  }
  if (!multiplicity_is_weyl_invariant(rs)) throw std::invalid_argument("multiplicities are not Weyl-invariant");
  MKWeightSpec s{std::move(rs), MKKind::macdonald, table, {}, std::move(base), {}, {}, false};
  s.x = torus_vars(s.rs, table);
  return s;
}

MKWeightSpec koornwinder_spec(int rank, VarTablePtr table, LaurentPoly base, const std::array<RatFunc, 4>& abcd,
                              const RatFunc& t) {
  require_unit(base);
  MKWeightSpec s{make_root_system(RootKind::BC, rank), MKKind::koornwinder, table, {}, std::move(base),
                 {abcd.begin(), abcd.end()}, {t}, false};
  s.x = torus_vars(s.rs, table);
  for (const auto& e : s.abcd)
    for (auto v : s.x)
      if (e.num().involves(v) || e.den().involves(v))
        throw std::invalid_argument("koornwinder parameters must not involve torus variables");
  return s;
}

MKWeightSpec koornwinder_spec(int rank, VarTablePtr table, LaurentPoly base, const std::array<RatFunc, 4>& abcd,
                              int k) {
  if (k < 0) throw std::invalid_argument("koornwinder k must be >= 0");
  RatFunc t = unit_pow(base, k);
  return koornwinder_spec(rank, std::move(table), std::move(base), abcd, t);
}

int root_u(const RootSystemData& rs, const WeightVec& alpha) {
  if (rs.kind == RootKind::A || rs.kind == RootKind::BC) return 1;
  int shortest = 0;
  for (const auto& a : rs.positive_roots) {
    int l = inner(a, a);
    if (shortest == 0 || l < shortest) shortest = l;
  }
  return inner(alpha, alpha) / shortest;
}

LaurentPoly build_weight_plus(const MKWeightSpec& spec) {
  const auto& t = spec.table;
  LaurentPoly one(t, 1), r = one;
  const LaurentPoly& q = spec.base;
  if (spec.kind == MKKind::macdonald) {
    for (const auto& a : spec.rs.positive_roots) {
      int k = static_cast<int>(integer_multiplicity(spec.rs, a).get_num().get_si());
      int u = root_u(spec.rs, a);
      if (k % u != 0) throw std::domain_error(kNotPolynomial);
      r *= poch(x_power(t, spec.x, a), q.pow(static_cast<unsigned>(u)), k / u);
    }
    return r;
  }
  // (x^2;q)_inf = (x, -x, r x, -r x; q)_inf with r^2 = q
  std::vector<LaurentPoly> bases{one, -one};
  if (auto h = unit_sqrt(q)) {
    bases.push_back(*h);
    bases.push_back(-*h);
  }
  std::array<LaurentPoly, 4> par{one, one, one, one};
  for (std::size_t i = 0; i < 4; ++i) {
    auto p = spec.abcd[i].as_polynomial();
    if (!p || !p->is_single_term()) throw std::domain_error(kNotPolynomial);
    par[i] = *p;
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  std::optional<std::array<int, 4>> powers;
  if (bases.size() == 4) {
    do {
      std::array<int, 4> m{};
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        const LaurentPoly& f = bases[static_cast<std::size_t>(perm[i])];
        auto quo = poly_divexact(par[i], f);
        auto e = quo ? base_power(*quo, q) : std::nullopt;
        ok = e && *e >= 0;
        if (ok) m[static_cast<std::size_t>(perm[i])] = *e;
      }
      if (ok) powers = m;
    } while (!powers && std::next_permutation(perm.begin(), perm.end()));
  }
  if (!powers) throw std::domain_error(kNotPolynomial);
  auto tp = spec.t.front().as_polynomial();
  auto k = tp ? base_power(*tp, q) : std::nullopt;
  if (spec.rs.rank > 1 && (!k || *k < 0)) throw std::domain_error(kNotPolynomial);
  const int kt = k.value_or(0);
  const auto l = spec.x.size();
  for (std::size_t i = 0; i < l; ++i) {
    LaurentPoly xi = LaurentPoly::variable(t, spec.x[i]);
    for (std::size_t j = 0; j < 4; ++j) r *= poch(bases[j] * xi, q, (*powers)[j]);
    for (std::size_t j = i + 1; j < l; ++j) {
      LaurentPoly xj = LaurentPoly::variable(t, spec.x[j]), xji = LaurentPoly::variable(t, spec.x[j], -1);
      r *= poch(xi * xj, q, kt) * poch(xi * xji, q, kt);
    }
  }
  return r;
}

LaurentPoly build_weight(const MKWeightSpec& spec) {
  LaurentPoly p = build_weight_plus(spec);
  return p * p.invert_variables(spec.x);
}

LaurentPoly build_weight_truncated(const MKWeightSpec& spec, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation order must be positive");
  const auto M = static_cast<unsigned>(truncation);
  const auto& t = spec.table;
  ExactScalar q = rational_constant(RatFunc(spec.base), "truncated mode needs a rational base");
  LaurentPoly one(t, 1);
  // sum_{j<M} (s;p)_j / (p;p)_j y^j, the truncation of (s y;p)_inf / (y;p)_inf
  auto qbinom = [&](const LaurentPoly& y, const ExactScalar& s, const ExactScalar& p) {
    LaurentPoly r(t), yj = one;
    ExactScalar c = 1, pj = 1;
    for (unsigned j = 0; j < M; ++j) {
      r += yj * c;
      c *= (1 - s * pj) / (1 - pj * p);
      pj *= p;
      yj *= y;
    }
    return r;
  };
  LaurentPoly r = one;
  if (spec.kind == MKKind::macdonald) {
    for (const auto& a : spec.rs.positive_roots) {
      long k = integer_multiplicity(spec.rs, a).get_num().get_si();
      ExactScalar p = scalar_pow(q, root_u(spec.rs, a));
      LaurentPoly y = x_power(t, spec.x, a);
      // (y;p)_inf / (t y;p)_inf = sum_j (t^{-1};p)_j/(p;p)_j (t y)^j
      ExactScalar tt = scalar_pow(q, k);
      r *= qbinom(y * tt, 1 / tt, p);
    }
  } else {
    std::array<ExactScalar, 4> e;
    for (std::size_t i = 0; i < 4; ++i) e[i] = rational_constant(spec.abcd[i], "truncated mode needs rational a,b,c,d");
    ExactScalar tt = rational_constant(spec.t.front(), "truncated mode needs a rational t");
    const auto l = spec.x.size();
    for (std::size_t i = 0; i < l; ++i) {
      LaurentPoly xi = LaurentPoly::variable(t, spec.x[i]);
      ExactScalar qk = 1;
      for (unsigned k = 0; k < M; ++k) {
        r *= one - xi * xi * qk;
        qk *= q;
      }
      for (const auto& ei : e)
        if (ei != 0) r *= qbinom(xi * ei, 0, q);  // 1/(e x;q)_inf
      for (std::size_t j = i + 1; j < l; ++j) {
        LaurentPoly xj = LaurentPoly::variable(t, spec.x[j]), xji = LaurentPoly::variable(t, spec.x[j], -1);
        // (y;q)_inf/(t y;q)_inf = sum_j (t^{-1};q)_j/(q;q)_j (t y)^j
        r *= qbinom(xi * xj * tt, 1 / tt, q) * qbinom(xi * xji * tt, 1 / tt, q);
      }
    }
  }
  return r * r.invert_variables(spec.x);
}

LaurentPoly ct_inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta,
                             const std::vector<std::size_t>& xvars) {
  LaurentPoly a = f * delta;
  LaurentPoly gb = g.invert_variables(xvars);
  auto key = [&](const Monomial& m) {
    Monomial k;
    for (auto v : xvars) k.exp[v] = m.exp[v];
    return k;
  };
  std::unordered_map<Monomial, std::vector<const Term*>, MonomialHash> by_x;
  for (const auto& t : gb.terms()) by_x[key(t.mono)].push_back(&t);
  std::vector<Term> out;
  for (const auto& t : a.terms()) {
    Monomial want = Monomial{} / key(t.mono);
    auto it = by_x.find(want);
    if (it == by_x.end()) continue;
    for (const Term* u : it->second) out.push_back({t.mono * u->mono, t.coeff * u->coeff});
  }
  return LaurentPoly::from_terms(f.table(), std::move(out));
}

ExactScalar ct_inner_product(const LaurentPoly& f, const LaurentPoly& g, const LaurentPoly& delta) {
  std::vector<std::size_t> all(f.table()->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return constant_term_of_product(f * delta, g.invert_variables(all));
}

LaurentPoly x_coefficient(const LaurentPoly& p, const std::vector<std::size_t>& xvars, const WeightVec& nu) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < xvars.size() && match; ++i) match = t.mono.exp[xvars[i]] == nu[i];
    if (!match) continue;
    Term r = t;
    for (auto v : xvars) r.mono.exp[v] = 0;
    out.push_back(r);
  }
  return LaurentPoly::from_terms(p.table(), std::move(out));
}

ShiftOperator::ShiftOperator(LaurentPoly base, std::vector<ShiftTerm> terms, std::string error)
    : base_(std::move(base)), base_inv_(base_.table()), common_den_(base_.table(), 1), terms_(std::move(terms)),
      error_(std::move(error)) {
  require_unit(base_);
  base_inv_ = unit_pow(base_, -1);
  for (const auto& t : terms_) common_den_ = lcm(common_den_, t.coeff.den());
  for (const auto& t : terms_)
    nums_.push_back(t.coeff.num() * divide_exact(common_den_, t.coeff.den(), "internal: lcm not divisible"));
}

LaurentPoly ShiftOperator::apply(const LaurentPoly& f) const {
  const auto& tab = f.table();
  LaurentPoly acc(tab);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    LaurentPoly x = LaurentPoly::variable(tab, t.var);
    LaurentPoly shift = unit_pow(t.power >= 0 ? base_ : base_inv_, std::abs(t.power)) * x;
    LaurentPoly d = f.substitute_unit(t.var, shift) - f;
    if (!d.is_zero()) acc += nums_[i] * d;
  }
  auto r = poly_divexact(acc, common_den_);
  if (!r) throw std::domain_error(error_);
  return std::move(*r);
}

LaurentPoly weyl_act(const LaurentPoly& f, const SignedPerm& w, const std::vector<std::size_t>& xvars) {
  return f.map_monomials([&](const Monomial& m) {
    Monomial r = m;
    for (auto v : xvars) r.exp[v] = 0;
    for (std::size_t i = 0; i < xvars.size(); ++i)
      r.exp[xvars[static_cast<std::size_t>(w.perm[i])]] = w.sign[i] * m.exp[xvars[i]];
    return r;
  });
}

RatFunc weyl_act(const RatFunc& f, const SignedPerm& w, const std::vector<std::size_t>& xvars) {
  return RatFunc(weyl_act(f.num(), w, xvars), weyl_act(f.den(), w, xvars));
}

RatFunc phi_sigma(const MKWeightSpec& spec) {
  const auto& t = spec.table;
  RatFunc one(t, 1), q(spec.base);
  if (spec.kind == MKKind::koornwinder) {
    RatFunc x1 = LaurentPoly::variable(t, spec.x[0]);
    RatFunc num = one, den = (one - x1 * x1) * (one - q * x1 * x1);
    for (const auto& e : spec.abcd) num *= one - e * x1;
    const RatFunc& tt = spec.t.front();
    for (std::size_t j = 1; j < spec.x.size(); ++j) {
      RatFunc xj = LaurentPoly::variable(t, spec.x[j]), xji = LaurentPoly::variable(t, spec.x[j], -1);
      num *= (one - tt * x1 * xj) * (one - tt * x1 * xji);
      den *= (one - x1 * xj) * (one - x1 * xji);
    }
    return num / den;
  }
  RatFunc phi = one;
  for (const auto& a : spec.rs.positive_roots) {
    int s = a[0];
    if (s == 0) continue;
    int k = static_cast<int>(integer_multiplicity(spec.rs, a).get_num().get_si());
    if (k == 0) continue;
    int u = root_u(spec.rs, a);
    RatFunc y = x_power(t, spec.x, a);
    RatFunc p = q.pow(u), ta = q.pow(k);
    if (s % u == 0) {
      int j = s / u;
      if (j > 0) {
        for (int i = 0; i < j; ++i) phi *= (one - ta * p.pow(i) * y) / (one - p.pow(i) * y);
      } else {
        for (int i = 0; i < -j; ++i) phi *= (one - p.pow(j + i) * y) / (one - ta * p.pow(j + i) * y);
      }
    } else if (k % u == 0) {
      RatFunc f0 = one, f1 = one, qs = q.pow(s);
      for (int i = 0; i < k / u; ++i) {
        f0 *= one - p.pow(i) * y;
        f1 *= one - p.pow(i) * qs * y;
      }
      phi *= f1 / f0;
    } else {
      throw std::domain_error(kNotPolynomial);
    }
  }
  return phi;
}

ShiftOperator macdonald_operator(const MKWeightSpec& spec) {
  RatFunc phi = phi_sigma(spec);
  auto W = weyl_group(spec.rs);
  WeightVec sigma(spec.rs.dim(), 0);
  sigma[0] = 1;
  std::map<WeightVec, std::vector<const SignedPerm*>> cosets;
  for (const auto& w : W) cosets[w.apply(sigma)].push_back(&w);
  bool invariant = true;
  for (const auto* w : cosets[sigma])
    if (!(weyl_act(phi, *w, spec.x) == phi)) {
      invariant = false;
      break;
    }
  const auto orbit = static_cast<long>(cosets.size());
  std::vector<ShiftTerm> terms;
  for (const auto& [mu, ws] : cosets) {
    RatFunc psi(spec.table);
    if (invariant) {
      psi = weyl_act(phi, *ws.front(), spec.x) * RatFunc(spec.table, static_cast<long>(ws.size()));
    } else {
      for (const auto* w : ws) psi += weyl_act(phi, *w, spec.x);
    }
    psi *= RatFunc(spec.table, ExactScalar(1, orbit));
    std::size_t idx = spec.rs.dim();
    int sign = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mu[i] != 0) {
        if (idx != spec.rs.dim() || std::abs(mu[i]) != 1) throw std::logic_error("unexpected orbit of eps_1");
        idx = i;
        sign = mu[i];
      }
    terms.push_back({spec.x[idx], sign, psi});
  }
  return ShiftOperator(spec.base, std::move(terms), "D_σ output not polynomial");
}

namespace {

MKPolynomial assemble(const MKWeightSpec& spec, const WeightVec& lambda, std::vector<WeightVec> basis,
                      std::vector<RatFunc> coeffs) {
  LaurentPoly den(spec.table, 1);
  for (const auto& c : coeffs) den = lcm(den, c.den());
  LaurentPoly num(spec.table);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    num += coeffs[i].num() * divide_exact(den, coeffs[i].den(), "internal: lcm not divisible") *
           orbit_sum(spec.rs, basis[i], spec.table, spec.x);
  }
  return {lambda, std::move(basis), std::move(coeffs), std::move(num), std::move(den)};
}

}  // namespace

MKPolynomial gram_schmidt_mk(const MKWeightSpec& spec, const WeightVec& lambda, const LaurentPoly& delta) {
  auto basis = dominant_weights_below(spec.rs, lambda);
  const std::size_t n = basis.size() - 1;
  std::vector<RatFunc> coeffs(basis.size(), RatFunc(spec.table));
  coeffs.back() = RatFunc(spec.table, 1);
  if (n > 0) {
    std::vector<LaurentPoly> m, md;
    for (const auto& mu : basis) {
      m.push_back(orbit_sum(spec.rs, mu, spec.table, spec.x));
      md.push_back(m.back() * delta);
    }
    auto ip = [&](std::size_t i, std::size_t j) { return ct_inner_product(m[i], m[j], delta, spec.x); };
    PolyMatrix g(spec.table, n, n);
    RatVector b(n, RatFunc(spec.table));
    for (std::size_t nu = 0; nu < n; ++nu) {
      for (std::size_t mu = 0; mu < n; ++mu) g(nu, mu) = ip(mu, nu);
      b[nu] = -RatFunc(ip(n, nu));
    }
    auto inv = g.inverse();
    if (!inv) throw std::domain_error("singular Gram matrix at lambda = " + weight_to_string(lambda));
    auto c = inv->apply(b);
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = c[i];
  }
  return assemble(spec, lambda, std::move(basis), std::move(coeffs));
}

MKPolynomial gram_schmidt_mk(const MKWeightSpec& spec, const WeightVec& lambda) {
  return gram_schmidt_mk(spec, lambda, build_weight(spec));
}

MKPolynomial mk_eigen_polynomial(const MKWeightSpec& spec, const ShiftOperator& op, const WeightVec& lambda) {
  auto basis = dominant_weights_below(spec.rs, lambda);
  const std::size_t n = basis.size();
  PolyMatrix d(spec.table, n, n);
  for (std::size_t mu = 0; mu < n; ++mu) {
    LaurentPoly dm = op.apply(orbit_sum(spec.rs, basis[mu], spec.table, spec.x));
    LaurentPoly back(spec.table);
    for (std::size_t nu = 0; nu < n; ++nu) {
      LaurentPoly c = x_coefficient(dm, spec.x, basis[nu]);
      d(nu, mu) = c;
      back += c * orbit_sum(spec.rs, basis[nu], spec.table, spec.x);
    }
    if (!(back == dm)) throw std::domain_error("D_σ does not preserve the dominated span at " + weight_to_string(basis[mu]));
  }
  RatFunc e = d(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) d(i, i) -= e;
  auto ns = d.nullspace();
  if (ns.size() != 1 || ns[0].back().is_zero())
    throw std::domain_error("degenerate eigenvalue at lambda = " + weight_to_string(lambda));
  RatFunc lead = ns[0].back();
  std::vector<RatFunc> coeffs;
  for (const auto& c : ns[0]) coeffs.push_back(c / lead);
  return assemble(spec, lambda, std::move(basis), std::move(coeffs));
}

MKEigenEntry check_eigen(const ShiftOperator& op, const MKPolynomial& p, const std::vector<std::size_t>& xvars) {
  auto t0 = std::chrono::steady_clock::now();
  LaurentPoly dn = op.apply(p.numerator);
  LaurentPoly cn = x_coefficient(p.numerator, xvars, p.lambda), cd = x_coefficient(dn, xvars, p.lambda);
  RatFunc e = RatFunc(cd) / RatFunc(cn);
  MKEigenEntry r{p.lambda, false, e, dn * e.den() - e.num() * p.numerator, 0};
  r.pass = r.residual.is_zero();
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool MKReport::all_pass() const {
  for (const auto& e : eigen)
    if (!e.pass) return false;
  for (const auto& o : orth)
    if (!o.value.is_zero()) return false;
  return true;
}

MKReport verify_mk_diagonalization(const MKWeightSpec& spec, const WeightVec& lambda_max, Exec exec) {
  ShiftOperator op = macdonald_operator(spec);
  std::optional<LaurentPoly> delta;
  try {
    delta = build_weight(spec);
  } catch (const std::domain_error&) {
  }
  auto lambdas = dominant_weights_below(spec.rs, lambda_max);
  MKReport rep;
  rep.route = delta ? "gram-schmidt" : "eigen";
  LaurentPoly zero(spec.table);
  rep.polys.resize(lambdas.size(), MKPolynomial{{}, {}, {}, zero, zero});
  rep.eigen.resize(lambdas.size(), MKEigenEntry{{}, false, RatFunc(spec.table), zero, 0});
  sweep(lambdas.size(), exec, [&](std::size_t i) {
    rep.polys[i] = delta ? gram_schmidt_mk(spec, lambdas[i], *delta) : mk_eigen_polynomial(spec, op, lambdas[i]);
    rep.eigen[i] = check_eigen(op, rep.polys[i], spec.x);
  });
  if (delta) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      for (std::size_t j = i + 1; j < lambdas.size(); ++j) pairs.emplace_back(i, j);
    rep.orth.resize(pairs.size(), MKOrthEntry{{}, {}, zero});
    sweep(pairs.size(), exec, [&](std::size_t k) {
      auto [i, j] = pairs[k];
      rep.orth[k] = {lambdas[i], lambdas[j],
                     ct_inner_product(rep.polys[i].numerator, rep.polys[j].numerator, *delta, spec.x)};
    });
  }
  return rep;
}

LaurentPoly schur_polynomial(const WeightVec& lambda, const VarTablePtr& table, const std::vector<std::size_t>& xvars) {
  const int n = static_cast<int>(xvars.size());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("schur_polynomial needs a partition");
  std::vector<std::vector<int>> tab;
  for (int len : lambda) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<Term> terms;
  Monomial cur;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == tab.size()) {
      terms.push_back({cur, 1});
      return;
    }
    if (c == tab[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      tab[r][c] = v;
      ++cur.exp[xvars[static_cast<std::size_t>(v - 1)]];
      fill(r, c + 1);
      --cur.exp[xvars[static_cast<std::size_t>(v - 1)]];
    }
  };
  fill(0, 0);
  return LaurentPoly::from_terms(table, std::move(terms));
}

}  // namespace qsymm
