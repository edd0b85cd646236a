#pragma once

#include <optional>
#include <string>

#include "qsymm/laurent_poly.hpp"

namespace qsymm {

// Reduced quotient num/den. Canonical form: den is a genuine polynomial with no
// monomial factor and lex-leading coefficient 1, and gcd(num, den) = 1. Any
// monomial part of a denominator is moved into num (monomials are units).
class RatFunc {
 public:
  explicit RatFunc(VarTablePtr table);
  RatFunc(const LaurentPoly& p);  // NOLINT: polynomials are rational functions
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);
  RatFunc(VarTablePtr table, const ExactScalar& c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarTablePtr& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  std::optional<LaurentPoly> as_polynomial() const;
  LaurentPoly to_polynomial(const char* what = "rational function is not a Laurent polynomial") const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  RatFunc substitute_unit(std::size_t var, const LaurentPoly& unit) const;
  RatFunc substitute(std::size_t var, const ExactScalar& value) const;
  RatFunc invert_variables(std::span<const std::size_t> vars) const;
  RatFunc retable(const VarTablePtr& other) const;

  std::string to_string() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();
  LaurentPoly num_, den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

}  // namespace qsymm
