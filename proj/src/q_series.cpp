#include "qsymm/q_series.hpp"

#include <stdexcept>

namespace qsymm {

RatFunc q_pochhammer(const RatFunc& a, const RatFunc& base, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  RatFunc one(a.table(), 1), r = one, ak = a;
  for (int k = 0; k < n; ++k) {
    r *= one - ak;
    if (k + 1 < n) ak *= base;
  }
  return r;
}

LaurentPoly q_pochhammer(const LaurentPoly& a, const LaurentPoly& base, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative length");
  LaurentPoly one(a.table(), 1), r = one, ak = a;
  for (int k = 0; k < n; ++k) {
    r *= one - ak;
    if (k + 1 < n) ak *= base;
  }
  return r;
}

RatFunc phi_4_3_terminating(int n, const std::array<RatFunc, 3>& upper, const std::array<RatFunc, 3>& lower,
                            const RatFunc& arg, const RatFunc& base) {
  if (n < 0) throw std::invalid_argument("phi_4_3_terminating: negative n");
  const auto& table = base.table();
  RatFunc one(table, 1);
  RatFunc qn = base.pow(-n);
  RatFunc sum = one, term = one, qk = one;
  for (int k = 0; k < n; ++k) {
    RatFunc num = (one - qn * qk);
    for (const auto& u : upper) num *= one - u * qk;
    RatFunc den = one - base * qk;
    for (std::size_t i = 0; i < 3; ++i) {
      RatFunc f = one - lower[i] * qk;
      if (f.is_zero())
        throw std::domain_error("phi_4_3_terminating: lower parameter b" + std::to_string(i + 1) + " = " +
                                lower[i].to_string() + " makes a used Pochhammer symbol vanish");
      den *= f;
    }
    term *= num * arg / den;
    sum += term;
    qk *= base;
  }
  return sum;
}

AWParams make_aw_params(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d,
                        const LaurentPoly& base, std::string_view zname) {
  for (const auto* x : {&a, &b, &c, &d})
    if (!same_table(x->table(), base.table())) throw std::invalid_argument("AW parameters on different tables");
  if (base.is_zero()) throw std::invalid_argument("AW base must not be 0");
  if (base.is_constant() && (base.constant_term() == 1 || base.constant_term() == -1))
    throw std::invalid_argument("AW base must not be +-1");
  AWParams p{a, b, c, d, base, base.table()->index(zname)};
  for (const auto& x : p.list())
    if (x.num().involves(p.z) || x.den().involves(p.z)) throw std::invalid_argument("AW parameter depends on z");
  return p;
}

AWParams with_parameters(const AWParams& p, const std::array<RatFunc, 4>& abcd) {
  AWParams r = p;
  r.a = abcd[0];
  r.b = abcd[1];
  r.c = abcd[2];
  r.d = abcd[3];
  return r;
}

namespace {

struct Prepared {
  LaurentPoly a, b, c, d;
};

// Parameters must be Laurent polynomials; a is moved to a nonzero slot (the
// polynomial is symmetric in a,b,c,d).
Prepared prepare(const AWParams& p) {
  std::array<LaurentPoly, 4> v{p.a.to_polynomial("AW parameters must be Laurent polynomials"),
                               p.b.to_polynomial("AW parameters must be Laurent polynomials"),
                               p.c.to_polynomial("AW parameters must be Laurent polynomials"),
                               p.d.to_polynomial("AW parameters must be Laurent polynomials")};
  std::size_t pick = 4;
  for (std::size_t i = 0; i < 4 && pick == 4; ++i)
    if (v[i].is_single_term()) pick = i;
  for (std::size_t i = 0; i < 4 && pick == 4; ++i)
    if (!v[i].is_zero()) pick = i;
  if (pick == 4) throw std::domain_error("aw_polynomial: all four parameters are zero");
  std::swap(v[0], v[pick]);
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace

LaurentPoly aw_polynomial(int n, const AWParams& p) {
  if (n < 0) throw std::invalid_argument("aw_polynomial: negative degree");
  const auto& t = p.table();
  LaurentPoly one(t, 1);
  if (n == 0) return one;
  Prepared pr = prepare(p);
  const LaurentPoly& q = p.base;
  LaurentPoly z = LaurentPoly::variable(t, p.z), zi = LaurentPoly::variable(t, p.z, -1);
  LaurentPoly ab = pr.a * pr.b, ac = pr.a * pr.c, ad = pr.a * pr.d;
  LaurentPoly abcd = ab * pr.c * pr.d;
  const auto un = static_cast<std::size_t>(n);

  // E_k = (ab q^k, ac q^k, ad q^k; q)_{n-k}
  std::vector<LaurentPoly> qpow(un + 1, one);
  for (std::size_t k = 1; k <= un; ++k) qpow[k] = qpow[k - 1] * q;
  std::vector<LaurentPoly> e(un + 1, one);
  for (std::size_t k = un; k-- > 0;)
    e[k] = e[k + 1] * (one - ab * qpow[k]) * (one - ac * qpow[k]) * (one - ad * qpow[k]);

  LaurentPoly qn = q.pow(static_cast<unsigned>(n - 1));
  LaurentPoly s(t), ck = one, ak = one, bk = one;
  LaurentPoly qinv_n = divide_exact(one, q.pow(static_cast<unsigned>(n)), "AW base must be a unit");
  for (std::size_t k = 0; k <= un; ++k) {
    s += ck * ak * bk * qpow[k] * e[k];
    if (k == un) break;
    // C_{k+1} = C_k (1 - q^{k-n}) / (1 - q^{k+1})
    ck = divide_exact(ck * (one - qinv_n * qpow[k]), one - qpow[k + 1], "q-binomial not polynomial");
    ak *= one - abcd * qn * qpow[k];
    bk *= (one - pr.a * z * qpow[k]) * (one - pr.a * zi * qpow[k]);
  }
  return divide_exact(s, pr.a.pow(static_cast<unsigned>(n)), "aw_polynomial: a^n does not divide");
}

AWPolynomialR aw_polynomial_r(int n, const AWParams& p) {
  LaurentPoly body = aw_polynomial(n, p);
  if (n == 0) return {RatFunc(p.table(), 1), body};
  Prepared pr = prepare(p);
  LaurentPoly norm = q_pochhammer(pr.a * pr.b, p.base, n) * q_pochhammer(pr.a * pr.c, p.base, n) *
                     q_pochhammer(pr.a * pr.d, p.base, n);
  if (norm.is_zero()) throw std::domain_error("aw_polynomial_r: degenerate parameter products");
  RatFunc scale = RatFunc(pr.a.pow(static_cast<unsigned>(n))) / RatFunc(norm);
  return {scale, body};
}

}  // namespace qsymm
