#include "qsymm/laurent_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsymm {

void check_exponent(long e) {
  if (e > kExponentBound || e < -kExponentBound)
    throw std::overflow_error("exponent out of supported range");
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] + o.exp[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = exp[i] - o.exp[i];
  return r;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::min(a.exp[i], b.exp[i]);
  return r;
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exp) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

bool term_desc(const Term& a, const Term& b) { return a.mono > b.mono; }

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    ExactScalar c = terms[i].coeff;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? ExactScalar(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      ExactScalar c = subtract ? ExactScalar(a[i].coeff - b[j].coeff) : ExactScalar(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> collect(std::unordered_map<Monomial, ExactScalar, MonomialHash>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_desc);
  return out;
}

void check_monomial(const Monomial& m) {
  for (auto e : m.exp) check_exponent(e);
}

}  // namespace

LaurentPoly::LaurentPoly(VarTablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("null VarTable");
}

LaurentPoly::LaurentPoly(VarTablePtr table, const ExactScalar& c) : LaurentPoly(std::move(table)) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly LaurentPoly::variable(VarTablePtr table, std::string_view name, Exponent e) {
  auto idx = table->index(name);
  return variable(std::move(table), idx, e);
}

LaurentPoly LaurentPoly::variable(VarTablePtr table, std::size_t idx, Exponent e) {
  if (idx >= table->size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[idx] = e;
  return monomial(std::move(table), m, 1);
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, const Monomial& m, const ExactScalar& c) {
  check_monomial(m);
  for (std::size_t i = table->size(); i < kMaxVars; ++i)
    if (m.exp[i] != 0) throw std::invalid_argument("exponent on a variable outside the table");
  LaurentPoly p(std::move(table));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(VarTablePtr table, std::vector<Term> terms) {
  LaurentPoly p(std::move(table));
  for (auto& t : terms) check_monomial(t.mono);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(VarTablePtr table, std::vector<Term> terms) {
  LaurentPoly p(std::move(table));
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

ExactScalar LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono > x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

ExactScalar LaurentPoly::coefficient_sum() const {
  ExactScalar s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Exponent LaurentPoly::degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  Exponent d = terms_[0].mono.exp[var];
  for (const auto& t : terms_) d = std::max(d, t.mono.exp[var]);
  return d;
}

Exponent LaurentPoly::low_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  Exponent d = terms_[0].mono.exp[var];
  for (const auto& t : terms_) d = std::min(d, t.mono.exp[var]);
  return d;
}

bool LaurentPoly::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono.exp[var] != 0) return true;
  return false;
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

std::uint32_t LaurentPoly::var_mask() const {
  std::uint32_t mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) mask |= 1u << i;
  return mask;
}

void LaurentPoly::require_same(const LaurentPoly& o) const {
  if (!same_table(table_, o.table_)) throw std::invalid_argument("mismatched VarTable");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const ExactScalar& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(table_, 1);
  if (e == 0) return result;
  if (terms_.size() == 1) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      long v = static_cast<long>(terms_[0].mono.exp[i]) * static_cast<long>(e);
      check_exponent(v);
      m.exp[i] = static_cast<Exponent>(v);
    }
    return monomial(table_, m, scalar_pow(terms_[0].coeff, e));
  }
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m, const ExactScalar& c) const {
  LaurentPoly r(table_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial nm = t.mono * m;
    check_monomial(nm);
    r.terms_.push_back({nm, t.coeff * c});
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_unit(std::size_t var, const LaurentPoly& unit) const {
  require_same(unit);
  if (unit.size() != 1) throw std::invalid_argument("substitute_unit needs a single-term value");
  const Term& u = unit.terms_[0];
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e = t.mono.exp[var];
    Monomial m = t.mono;
    m.exp[var] = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      long v = static_cast<long>(m.exp[i]) + static_cast<long>(u.mono.exp[i]) * e;
      check_exponent(v);
      m.exp[i] = static_cast<Exponent>(v);
    }
    out.push_back({m, t.coeff * scalar_pow(u.coeff, e)});
  }
  return from_terms(table_, std::move(out));
}

LaurentPoly LaurentPoly::substitute(std::size_t var, const LaurentPoly& value) const {
  require_same(value);
  if (value.size() == 1) return substitute_unit(var, value);
  std::map<Exponent, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Exponent e = m.exp[var];
    m.exp[var] = 0;
    groups[e].push_back({m, t.coeff});
  }
  LaurentPoly result(table_);
  if (groups.empty()) return result;
  if (groups.begin()->first < 0)
    throw std::domain_error("negative power of a non-unit substitution value");
  LaurentPoly power(table_, 1);
  Exponent cur = 0;
  for (auto& [e, ts] : groups) {
    while (cur < e) {
      power = power * value;
      ++cur;
    }
    result += from_terms(table_, std::move(ts)) * power;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(std::size_t var, const ExactScalar& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Exponent e = m.exp[var];
    if (e < 0 && value == 0) throw std::domain_error("substituting 0 into a negative power");
    m.exp[var] = 0;
    out.push_back({m, t.coeff * scalar_pow(value, e)});
  }
  return from_terms(table_, std::move(out));
}

LaurentPoly LaurentPoly::map_monomials(const std::function<Monomial(const Monomial&)>& phi) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({phi(t.mono), t.coeff});
  return from_terms(table_, std::move(out));
}

LaurentPoly LaurentPoly::invert_variables(std::span<const std::size_t> vars) const {
  return map_monomials([&](const Monomial& m) {
    Monomial r = m;
    for (auto v : vars) r.exp[v] = -r.exp[v];
    return r;
  });
}

LaurentPoly LaurentPoly::retable(const VarTablePtr& other) const {
  if (same_table(table_, other)) {
    LaurentPoly r = *this;
    r.table_ = other;
    return r;
  }
  std::array<std::size_t, kMaxVars> where{};
  std::uint32_t mask = var_mask();
  for (std::size_t i = 0; i < table_->size(); ++i) {
    auto j = other->find(table_->name(i));
    if (!j) {
      if (mask & (1u << i))
        throw std::invalid_argument("variable '" + table_->name(i) + "' missing in target table");
      where[i] = kMaxVars;
    } else {
      where[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < table_->size(); ++i)
      if (where[i] < kMaxVars) m.exp[where[i]] = t.mono.exp[i];
    out.push_back({m, t.coeff});
  }
  return from_terms(other, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    ExactScalar c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.mono.is_one()) {
      os << qsymm::to_string(c);
      printed = true;
    }
    for (std::size_t i = 0; i < table_->size(); ++i) {
      Exponent e = t.mono.exp[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << table_->name(i);
      if (e != 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table_, b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
  if (a.size() * b.size() >= kernels::kParallelMulThreshold) return kernels::multiply_parallel(a, b);
  return kernels::multiply_serial(a, b);
}

LaurentPoly operator*(LaurentPoly a, const ExactScalar& c) { return a *= c; }
LaurentPoly operator*(const ExactScalar& c, LaurentPoly a) { return a *= c; }

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown PolyOp");
}

namespace kernels {

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.table());
  if (a.size() == 1) return b.mul_monomial(a.leading().mono, a.leading().coeff);
  if (b.size() == 1) return a.mul_monomial(b.leading().mono, b.leading().coeff);
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& big = a.size() <= b.size() ? b : a;
  std::unordered_map<Monomial, ExactScalar, MonomialHash> acc;
  acc.reserve(big.size() * 2);
  ExactScalar prod;
  for (const auto& s : small.terms()) {
    for (const auto& t : big.terms()) {
      prod = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (const auto& [m, c] : acc) check_monomial(m);
  return LaurentPoly::from_sorted_terms(a.table(), collect(acc));
}

LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
#ifndef _OPENMP
  return multiply_serial(a, b);
#else
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.table());
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& big = a.size() <= b.size() ? b : a;
  int nthreads = std::max(1, std::min<int>(omp_get_max_threads(), static_cast<int>(small.size())));
  if (nthreads == 1) return multiply_serial(a, b);
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(nthreads));
  auto st = small.terms();
  auto bt = big.terms();
#pragma omp parallel for num_threads(nthreads) schedule(static)
  for (int p = 0; p < nthreads; ++p) {
    std::size_t lo = st.size() * static_cast<std::size_t>(p) / static_cast<std::size_t>(nthreads);
    std::size_t hi = st.size() * static_cast<std::size_t>(p + 1) / static_cast<std::size_t>(nthreads);
    std::unordered_map<Monomial, ExactScalar, MonomialHash> acc;
    acc.reserve(bt.size() * 2);
    ExactScalar prod;
    for (std::size_t i = lo; i < hi; ++i)
      for (const auto& t : bt) {
        prod = st[i].coeff * t.coeff;
        auto [it, inserted] = acc.try_emplace(st[i].mono * t.mono, prod);
        if (!inserted) it->second += prod;
      }
    parts[static_cast<std::size_t>(p)] = collect(acc);
  }
  // pairwise tree merge of the sorted partial products
  while (parts.size() > 1) {
    std::vector<std::vector<Term>> next((parts.size() + 1) / 2);
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (2 * i + 1 < parts.size())
        next[i] = merge(parts[2 * i], parts[2 * i + 1], false);
      else
        next[i] = std::move(parts[2 * i]);
    }
    parts = std::move(next);
  }
  for (const auto& t : parts[0]) check_monomial(t.mono);
  return LaurentPoly::from_sorted_terms(a.table(), std::move(parts[0]));
#endif
}

}  // namespace kernels

MonomialSplit split_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return {Monomial{}, p};
  Monomial m = p.min_exponents();
  if (m.is_one()) return {m, p};
  Monomial inv = Monomial{} / m;
  return {m, p.mul_monomial(inv, 1)};
}

namespace {

// Division of polynomials (non-negative exponents, b without monomial factor
// is not required here) in the polynomial ring, lex order.
std::optional<LaurentPoly> divide_poly(const LaurentPoly& a, const LaurentPoly& b) {
  const auto& table = a.table();
  for (std::size_t v = 0; v < table->size(); ++v) {
    if (b.degree(v) > a.degree(v)) return std::nullopt;
  }
  if (b.size() == 1) {
    const Term& lt = b.leading();
    for (const auto& t : a.terms())
      if (!lt.mono.divides(t.mono)) return std::nullopt;
    return a.mul_monomial(Monomial{} / lt.mono, 1 / lt.coeff);
  }
  std::map<Monomial, ExactScalar, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lb = b.leading();
  ExactScalar inv_lc = 1 / lb.coeff;
  std::vector<Term> quotient;
  ExactScalar tmp;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lb.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lb.mono;
    ExactScalar qc = it->second * inv_lc;
    rem.erase(it);
    auto bt = b.terms();
    for (std::size_t i = 1; i < bt.size(); ++i) {
      Monomial m = bt[i].mono * qm;
      tmp = qc * bt[i].coeff;
      auto [jt, inserted] = rem.try_emplace(m, -tmp);
      if (!inserted) {
        jt->second -= tmp;
        if (jt->second == 0) rem.erase(jt);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return LaurentPoly::from_sorted_terms(a.table(), std::move(quotient));
}

}  // namespace

std::optional<LaurentPoly> poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.table());
  // Monomials are units: strip them, divide in the polynomial ring, restore.
  auto sa = split_monomial(a);
  auto sb = split_monomial(b);
  auto q = divide_poly(sa.rest, sb.rest);
  if (!q) return std::nullopt;
  return q->mul_monomial(sa.mono / sb.mono, 1);
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b, const char* what) {
  auto q = poly_divexact(a, b);
  if (!q) throw std::domain_error(what);
  return std::move(*q);
}

ExactScalar constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_table(a.table(), b.table())) throw std::invalid_argument("mismatched VarTable");
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& big = a.size() <= b.size() ? b : a;
  ExactScalar s = 0;
  for (const auto& t : small.terms()) {
    ExactScalar c = big.coefficient(Monomial{} / t.mono);
    if (c != 0) s += c * t.coeff;
  }
  return s;
}

}  // namespace qsymm
