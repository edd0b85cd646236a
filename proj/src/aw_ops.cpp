#include "qsymm/aw_ops.hpp"

#include <chrono>
#include <stdexcept>

namespace qsymm {

RatFunc aw_coefficient(const AWParams& p) {
  const auto& t = p.table();
  RatFunc one(t, 1), z = LaurentPoly::variable(t, p.z);
  RatFunc num = one;
  for (const auto& e : p.list()) num *= one - e * z;
  RatFunc den = (one - z * z) * (one - RatFunc(p.base) * z * z);
  return num / den;
}

QDifferenceOp aw_operator(const AWParams& p) {
  RatFunc up = aw_coefficient(p);
  std::array<std::size_t, 1> zs{p.z};
  return {up, up.invert_variables(zs), RatFunc(p.table()), RatFunc(p.base), p.z};
}

RatFunc aw_eigenvalue(int n, const AWParams& p) {
  RatFunc one(p.table(), 1), q(p.base);
  return -(one - q.pow(-n)) * (one - q.pow(n - 1) * p.a * p.b * p.c * p.d);
}

namespace {

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_constant()) return a;
  if (a.is_constant()) return b;
  return a * divide_exact(b, poly_gcd(a, b), "internal: gcd does not divide");
}

}  // namespace

LaurentPoly apply_qdiff(const QDifferenceOp& op, const LaurentPoly& f) {
  const auto& t = f.table();
  LaurentPoly base = op.base.to_polynomial("q-difference base must be a Laurent monomial");
  if (!base.is_single_term()) throw std::invalid_argument("q-difference base must be a single term");
  LaurentPoly z = LaurentPoly::variable(t, op.z);
  LaurentPoly base_inv = LaurentPoly::monomial(t, Monomial{} / base.leading().mono, 1 / base.leading().coeff);
  LaurentPoly up = f.substitute_unit(op.z, base * z) - f;
  LaurentPoly down = f.substitute_unit(op.z, base_inv * z) - f;

  LaurentPoly l = lcm(lcm(op.coeff_up.den(), op.coeff_down.den()), op.coeff_id.den());
  LaurentPoly num(t);
  auto add = [&](const RatFunc& c, const LaurentPoly& g) {
    if (c.is_zero() || g.is_zero()) return;
    num += c.num() * divide_exact(l, c.den(), "internal: lcm not divisible") * g;
  };
  add(op.coeff_up, up);
  add(op.coeff_down, down);
  add(op.coeff_id, f);
  auto q = poly_divexact(num, l);
  if (!q) throw std::domain_error("operator output not polynomial");
  return std::move(*q);
}

bool EigenReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

EigenReport verify_aw_eigen(int n_max, const AWParams& p, Exec exec) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  QDifferenceOp op = aw_operator(p);
  EigenReport rep;
  rep.entries.resize(static_cast<std::size_t>(n_max) + 1, EigenEntry{0, false, RatFunc(p.table()), LaurentPoly(p.table())});
  sweep(rep.entries.size(), exec, [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    int n = static_cast<int>(i);
    LaurentPoly pn = aw_polynomial(n, p);
    LaurentPoly lhs = apply_qdiff(op, pn);
    RatFunc ev = aw_eigenvalue(n, p);
    LaurentPoly rhs = (ev * RatFunc(pn)).to_polynomial("eigenvalue times P_n is not polynomial");
    EigenEntry& e = rep.entries[i];
    e.n = n;
    e.eigenvalue = ev;
    e.residual = lhs - rhs;
    e.pass = e.residual.is_zero();
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  });
  return rep;
}

namespace {

ExactScalar constant_of(const RatFunc& r, const char* what) {
  if (!r.is_constant()) throw std::invalid_argument(what);
  return r.num().constant_term();
}

ExactScalar norm1(const LaurentPoly& p) {
  ExactScalar s = 0;
  for (const auto& t : p.terms()) s += abs(t.coeff);
  return s;
}

}  // namespace

OrthogonalityResult aw_orthogonality_check(int n, int m, const AWParams& p, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation order must be positive");
  const auto& t = p.table();
  ExactScalar q = constant_of(RatFunc(p.base), "orthogonality check needs a rational base");
  if (!(q > 0 && q < 1)) throw std::domain_error("orthogonality check needs 0 < q < 1");
  std::array<ExactScalar, 4> e;
  for (std::size_t i = 0; i < 4; ++i) {
    e[i] = constant_of(p.list()[i], "orthogonality check needs rational parameters");
    if (abs(e[i]) >= 1)
      throw std::domain_error("parameter outside the continuous-weight regime (|e| < 1 required)");
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (e[i] * e[j] >= 1) throw std::domain_error("parameter product >= 1 (discrete masses)");

  const auto M = static_cast<unsigned>(truncation);
  LaurentPoly one(t, 1);
  LaurentPoly z = LaurentPoly::variable(t, p.z), zi = LaurentPoly::variable(t, p.z, -1);
  LaurentPoly prod = aw_polynomial(n, p) * aw_polynomial(m, p);

  // (z^2;q)_M (z^-2;q)_M
  ExactScalar qk = 1;
  LaurentPoly theta = one;
  std::vector<ExactScalar> qpow(M + 1);
  for (unsigned k = 0; k <= M; ++k) {
    qpow[k] = qk;
    qk *= q;
  }
  for (unsigned k = 0; k < M; ++k) theta *= (one - z * z * qpow[k]) * (one - zi * zi * qpow[k]);

  // 1/(e z;q)_inf = sum_j (e z)^j / (q;q)_j, truncated at j < M
  std::vector<ExactScalar> qq(M + 1);
  qq[0] = 1;
  for (unsigned j = 1; j <= M; ++j) qq[j] = qq[j - 1] * (1 - qpow[j]);
  LaurentPoly up = one, down = one;
  for (const auto& ei : e) {
    if (ei == 0) continue;
    std::vector<Term> pos, neg;
    ExactScalar ej = 1;
    for (unsigned j = 0; j < M; ++j) {
      Monomial mp, mn;
      mp.exp[p.z] = static_cast<Exponent>(j);
      mn.exp[p.z] = -static_cast<Exponent>(j);
      pos.push_back({mp, ej / qq[j]});
      neg.push_back({mn, ej / qq[j]});
      ej *= ei;
    }
    up *= LaurentPoly::from_terms(t, pos);
    down *= LaurentPoly::from_terms(t, neg);
  }
  OrthogonalityResult res;
  res.value = constant_term_of_product(prod * theta * up, down);

  // Rigorous tail bound in the Wiener norm (sum of |coefficients|), which
  // dominates |constant term| and is submultiplicative.
  ExactScalar x = qpow[M] / (1 - q);
  if (x >= ExactScalar(1, 2)) throw std::domain_error("truncation order too small for a tail bound");
  ExactScalar s_m = 1;
  for (unsigned k = 0; k < M; ++k) s_m *= 1 + qpow[k];
  ExactScalar qq_low = qq[M] * (1 - x);  // (q;q)_inf >= (q;q)_M (1 - q^M/(1-q))
  struct Factor {
    ExactScalar eps, big;
  };
  std::vector<Factor> factors;
  for (int i = 0; i < 2; ++i) factors.push_back({s_m * x / (1 - x), s_m / (1 - x)});
  for (const auto& ei : e) {
    if (ei == 0) continue;
    ExactScalar r = abs(ei);
    ExactScalar rpoch = 1;
    for (unsigned k = 0; k < M; ++k) rpoch *= 1 - r * qpow[k];
    ExactScalar big = 1 / (rpoch * (1 - r * x));
    ExactScalar eps = scalar_pow(r, static_cast<long>(M)) / ((1 - r) * qq_low);
    factors.push_back({eps, big});
    factors.push_back({eps, big});
  }
  ExactScalar total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ExactScalar term = factors[i].eps;
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) term *= factors[j].big;
    total += term;
  }
  res.bound = norm1(prod) * total;
  return res;
}

}  // namespace qsymm
