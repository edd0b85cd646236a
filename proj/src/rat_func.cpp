#include "qsymm/rat_func.hpp"

#include <stdexcept>

namespace qsymm {

namespace {

bool is_one(const LaurentPoly& p) { return p.is_constant() && p.constant_term() == 1; }

LaurentPoly quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (is_one(b)) return a;
  return divide_exact(a, b, "internal: gcd does not divide");
}

}  // namespace

RatFunc::RatFunc(VarTablePtr table) : num_(table), den_(table, 1) {}

RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(p.table(), 1) {}

RatFunc::RatFunc(VarTablePtr table, const ExactScalar& c) : num_(table, c), den_(table, 1) {}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (!same_table(num.table(), den.table())) throw std::invalid_argument("mismatched VarTable");
  if (den.is_zero()) throw std::domain_error("zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(num_.table(), 1);
    return;
  }
  auto sd = split_monomial(den_);
  if (!sd.mono.is_one()) num_ = num_.mul_monomial(Monomial{} / sd.mono, 1);
  den_ = std::move(sd.rest);
  if (den_.is_constant()) {
    ExactScalar c = den_.constant_term();
    if (c != 1) num_ *= ExactScalar(1 / c);
    den_ = LaurentPoly(num_.table(), 1);
    return;
  }
  if (auto q = poly_divexact(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(num_.table(), 1);
    return;
  }
  LaurentPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = quotient(num_, g);
    den_ = quotient(den_, g);
  }
  ExactScalar lc = den_.leading().coeff;
  if (lc != 1) {
    ExactScalar inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<LaurentPoly> RatFunc::as_polynomial() const {
  if (!den_.is_constant()) return std::nullopt;
  return num_;
}

LaurentPoly RatFunc::to_polynomial(const char* what) const {
  if (!den_.is_constant()) throw std::domain_error(what);
  return num_;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_one(den_)) reduce();
    else if (num_.is_zero()) den_ = LaurentPoly(num_.table(), 1);
    return *this;
  }
  if (is_one(o.den_)) {
    // gcd(n + m*d, d) = gcd(n, d) = 1, so the result is already reduced
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = LaurentPoly(num_.table(), 1);
    return *this;
  }
  if (is_one(den_)) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(num_.table(), 1);
    return *this;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly a = quotient(den_, g), b = quotient(o.den_, g);
  num_ = num_ * b + o.num_ * a;
  den_ = den_ * b;
  if (num_.is_zero()) {
    den_ = LaurentPoly(num_.table(), 1);
    return *this;
  }
  if (!g.is_constant()) {
    LaurentPoly h = poly_gcd(num_, g);
    if (!h.is_constant()) {
      num_ = quotient(num_, h);
      den_ = quotient(den_, h);
    }
  }
  ExactScalar lc = den_.leading().coeff;
  if (lc != 1) {
    ExactScalar inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (!same_table(table(), o.table())) throw std::invalid_argument("mismatched VarTable");
  if (is_zero() || o.is_zero()) {
    *this = RatFunc(table());
    return *this;
  }
  bool d1 = is_one(den_), d2 = is_one(o.den_);
  if (d1 && d2) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly n1 = num_, n2 = o.num_, e1 = den_, e2 = o.den_;
  if (!d2) {
    LaurentPoly g = poly_gcd(n1, e2);
    if (!g.is_constant()) {
      n1 = quotient(n1, g);
      e2 = quotient(e2, g);
    }
  }
  if (!d1) {
    LaurentPoly g = poly_gcd(n2, e1);
    if (!g.is_constant()) {
      n2 = quotient(n2, g);
      e1 = quotient(e1, g);
    }
  }
  num_ = n1 * n2;
  den_ = e1 * e2;
  ExactScalar lc = den_.leading().coeff;
  if (den_.is_constant()) {
    num_ *= ExactScalar(1 / lc);
    den_ = LaurentPoly(num_.table(), 1);
  } else if (lc != 1) {
    ExactScalar inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  // num = m * n0 with n0 monomial-free; den/num = den * m^{-1} / n0
  auto sn = split_monomial(num_);
  LaurentPoly nn = den_.mul_monomial(Monomial{} / sn.mono, 1);
  LaurentPoly dd = sn.rest;
  ExactScalar lc = dd.leading().coeff;
  if (dd.is_constant()) return RatFunc(nn * ExactScalar(1 / lc), LaurentPoly(table(), 1), Canonical{});
  ExactScalar inv = 1 / lc;
  return RatFunc(nn * inv, dd * inv, Canonical{});
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  auto ue = static_cast<unsigned>(e);
  // powers of coprime polynomials stay coprime; den stays monic and monomial-free
  return RatFunc(num_.pow(ue), den_.pow(ue), Canonical{});
}

RatFunc RatFunc::substitute_unit(std::size_t var, const LaurentPoly& unit) const {
  return RatFunc(num_.substitute_unit(var, unit), den_.substitute_unit(var, unit));
}

RatFunc RatFunc::substitute(std::size_t var, const ExactScalar& value) const {
  LaurentPoly d = den_.substitute(var, value);
  if (d.is_zero()) throw std::domain_error("denominator vanishes at substitution point");
  return RatFunc(num_.substitute(var, value), d);
}

RatFunc RatFunc::invert_variables(std::span<const std::size_t> vars) const {
  return RatFunc(num_.invert_variables(vars), den_.invert_variables(vars));
}

RatFunc RatFunc::retable(const VarTablePtr& other) const {
  return RatFunc(num_.retable(other), den_.retable(other));
}

std::string RatFunc::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

}  // namespace qsymm
