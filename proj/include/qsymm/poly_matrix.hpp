#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qsymm/rat_func.hpp"

namespace qsymm {

using RatVector = std::vector<RatFunc>;

// Dense row-major matrix over the rational-function field Q(vars).
class PolyMatrix {
 public:
  PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(VarTablePtr table, std::size_t n);
  static PolyMatrix unit(VarTablePtr table, std::size_t n, std::size_t i, std::size_t j);  // e_ij

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarTablePtr& table() const { return table_; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<RatFunc>& entries() const { return data_; }

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix operator-() const;
  PolyMatrix scaled(const RatFunc& c) const;
  PolyMatrix transpose() const;
  // For an (n*m) x (n*m) matrix on C^n (x) C^m: transpose in the first leg only,
  // X^{t1}[(i,k),(j,l)] = X[(j,k),(i,l)].
  PolyMatrix partial_transpose_first(std::size_t n) const;
  PolyMatrix block(std::size_t bi, std::size_t bj, std::size_t size) const;
  PolyMatrix map(const std::function<RatFunc(const RatFunc&)>& f) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  RatVector apply(const RatVector& v) const;

  std::optional<PolyMatrix> inverse() const;
  std::size_t rank() const;
  std::vector<RatVector> nullspace() const;  // basis of {v : M v = 0}

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  void require_shape(const PolyMatrix& o) const;
  VarTablePtr table_;
  std::size_t rows_, cols_;
  std::vector<RatFunc> data_;
};

PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b);
PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
// Matrix of the flip v_i (x) v_j -> v_j (x) v_i on C^n (x) C^n.
PolyMatrix flip_matrix(VarTablePtr table, std::size_t n);
PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);

// Fraction-free (Bareiss) row echelon data over polynomials, shared by rank,
// nullspace and the span checks.
struct EchelonForm {
  std::vector<std::vector<LaurentPoly>> rows;  // echelon rows, polynomial entries
  std::vector<std::size_t> pivots;              // pivot column per nonzero row
};
EchelonForm fraction_free_echelon(const PolyMatrix& m);

namespace kernels {
PolyMatrix matmul_serial(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matmul_parallel(const PolyMatrix& a, const PolyMatrix& b);
}  // namespace kernels

}  // namespace qsymm
