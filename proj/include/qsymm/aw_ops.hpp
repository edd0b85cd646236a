#pragma once

#include <vector>

#include "qsymm/parallel.hpp"
#include "qsymm/q_series.hpp"

namespace qsymm {

// f -> up*(f(base z) - f) + down*(f(z/base) - f) + id*f
struct QDifferenceOp {
  RatFunc coeff_up, coeff_down, coeff_id, base;
  std::size_t z = 0;
};

// A(z;q) = (1-az)(1-bz)(1-cz)(1-dz) / ((1-z^2)(1-qz^2))
RatFunc aw_coefficient(const AWParams& p);
QDifferenceOp aw_operator(const AWParams& p);
// -(1-q^{-n})(1-q^{n-1}abcd)
RatFunc aw_eigenvalue(int n, const AWParams& p);

// Certifies that the result is a Laurent polynomial; throws
// std::domain_error("operator output not polynomial") otherwise.
LaurentPoly apply_qdiff(const QDifferenceOp& op, const LaurentPoly& f);

struct EigenEntry {
  int n = 0;
  bool pass = false;
  RatFunc eigenvalue;
  LaurentPoly residual;  // op(P_n) - eigenvalue * P_n
  double runtime_ms = 0;
};

struct EigenReport {
  std::vector<EigenEntry> entries;
  bool all_pass() const;
};

EigenReport verify_aw_eigen(int n_max, const AWParams& p, Exec exec = Exec::parallel);

struct OrthogonalityResult {
  ExactScalar value;  // constant term of the truncated integrand
  ExactScalar bound;  // rigorous bound on |exact - value|
  bool below_bound() const { return abs(value) <= bound; }
  bool positive() const { return value > bound; }
};

// Parameters and base must be rational constants with 0 < q < 1 and
// |a|,|b|,|c|,|d| < 1 and pairwise products not >= 1.
OrthogonalityResult aw_orthogonality_check(int n, int m, const AWParams& p, int truncation);

}  // namespace qsymm
