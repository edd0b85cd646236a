#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsymm/exact_scalar.hpp"
#include "qsymm/var_table.hpp"

namespace qsymm {

using Exponent = std::int32_t;

// Degrees in this library stay in the low hundreds; anything beyond this bound
// is treated as a bug and rejected when a monomial is formed.
inline constexpr Exponent kExponentBound = 1 << 24;

struct Monomial {
  std::array<Exponent, kMaxVars> exp{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool is_one() const;
  // Componentwise min / max, used for monomial content.
  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& o) const;  // all exponents <= o's
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  ExactScalar coeff;
};

void check_exponent(long e);

// Sparse multivariate Laurent polynomial over Q. Terms are kept sorted in
// descending lexicographic order of exponent vectors (VarTable order), with no
// zero coefficients, so terms().front() is the leading term.
class LaurentPoly {
 public:
  explicit LaurentPoly(VarTablePtr table);
  LaurentPoly(VarTablePtr table, const ExactScalar& c);

  static LaurentPoly variable(VarTablePtr table, std::string_view name, Exponent e = 1);
  static LaurentPoly variable(VarTablePtr table, std::size_t idx, Exponent e = 1);
  static LaurentPoly monomial(VarTablePtr table, const Monomial& m, const ExactScalar& c);
  static LaurentPoly from_terms(VarTablePtr table, std::vector<Term> terms);
  // Trusts the caller: terms strictly descending and nonzero.
  static LaurentPoly from_sorted_terms(VarTablePtr table, std::vector<Term> terms);

  const VarTablePtr& table() const { return table_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  const Term& leading() const;
  ExactScalar coefficient(const Monomial& m) const;
  ExactScalar constant_term() const { return coefficient(Monomial{}); }
  ExactScalar coefficient_sum() const;

  Exponent degree(std::size_t var) const;      // max exponent; 0 for the zero poly
  Exponent low_degree(std::size_t var) const;  // min exponent
  bool involves(std::size_t var) const;
  Monomial min_exponents() const;  // componentwise min over terms
  std::uint32_t var_mask() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const ExactScalar& c);
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned e) const;
  LaurentPoly mul_monomial(const Monomial& m, const ExactScalar& c) const;

  // f(..., x_var -> c * x_var^k * m ...): substitutes the variable by a
  // single-term Laurent polynomial (a unit), which keeps the result Laurent.
  LaurentPoly substitute_unit(std::size_t var, const LaurentPoly& unit) const;
  // General substitution by a Laurent polynomial; negative powers require a unit.
  LaurentPoly substitute(std::size_t var, const LaurentPoly& value) const;
  LaurentPoly substitute(std::size_t var, const ExactScalar& value) const;
  // x^m -> c(m) x^{phi(m)}; phi must be injective or terms get merged.
  LaurentPoly map_monomials(const std::function<Monomial(const Monomial&)>& phi) const;
  LaurentPoly invert_variables(std::span<const std::size_t> vars) const;
  // Moves the polynomial to another table by variable name.
  LaurentPoly retable(const VarTablePtr& other) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void require_same(const LaurentPoly& o) const;
  VarTablePtr table_;
  std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const ExactScalar& c);
LaurentPoly operator*(const ExactScalar& c, LaurentPoly a);

enum class PolyOp { add, sub, mul };
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

// Returns q with a == q*b, or nullopt (NotDivisible). Throws on b == 0.
std::optional<LaurentPoly> poly_divexact(const LaurentPoly& a, const LaurentPoly& b);
// Like poly_divexact but throws std::domain_error when not divisible.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b, const char* what);

// gcd in the Laurent ring, normalized: a polynomial with no monomial factor and
// leading coefficient 1. gcd(0, b) is b normalized; gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Splits p = m * rest with rest a polynomial having no monomial factor.
struct MonomialSplit {
  Monomial mono;
  LaurentPoly rest;
};
MonomialSplit split_monomial(const LaurentPoly& p);

// Constant term of a*b without forming the product.
ExactScalar constant_term_of_product(const LaurentPoly& a, const LaurentPoly& b);

namespace kernels {
LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b);
// Products with at least this many term pairs go to the parallel kernel.
inline constexpr std::size_t kParallelMulThreshold = 1u << 16;
}  // namespace kernels

}  // namespace qsymm
