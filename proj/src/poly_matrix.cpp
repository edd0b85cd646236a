#include "qsymm/poly_matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsymm {

PolyMatrix::PolyMatrix(VarTablePtr table, std::size_t rows, std::size_t cols)
    : table_(std::move(table)), rows_(rows), cols_(cols), data_(rows * cols, RatFunc(table_)) {}

PolyMatrix PolyMatrix::identity(VarTablePtr table, std::size_t n) {
  PolyMatrix m(table, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc(table, 1);
  return m;
}

PolyMatrix PolyMatrix::unit(VarTablePtr table, std::size_t n, std::size_t i, std::size_t j) {
  PolyMatrix m(table, n, n);
  m(i, j) = RatFunc(table, 1);
  return m;
}

void PolyMatrix::require_shape(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  require_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

PolyMatrix PolyMatrix::scaled(const RatFunc& c) const {
  PolyMatrix r = *this;
  for (auto& e : r.data_)
    if (!e.is_zero()) e *= c;
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(table_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

PolyMatrix PolyMatrix::partial_transpose_first(std::size_t n) const {
  if (rows_ != cols_ || n == 0 || rows_ % n != 0) throw std::invalid_argument("partial transpose shape");
  std::size_t m = rows_ / n;
  PolyMatrix r(table_, rows_, cols_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < m; ++l) r(i * m + k, j * m + l) = (*this)(j * m + k, i * m + l);
  return r;
}

PolyMatrix PolyMatrix::block(std::size_t bi, std::size_t bj, std::size_t size) const {
  if ((bi + 1) * size > rows_ || (bj + 1) * size > cols_) throw std::out_of_range("block out of range");
  PolyMatrix r(table_, size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) r(i, j) = (*this)(bi * size + i, bj * size + j);
  return r;
}

PolyMatrix PolyMatrix::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  PolyMatrix r = *this;
  for (auto& e : r.data_) e = f(e);
  return r;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t PolyMatrix::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& e : data_)
    if (!e.is_zero()) ++c;
  return c;
}

RatVector PolyMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RatVector out(rows_, RatFunc(table_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() * a.cols() * b.cols() >= 512) return kernels::matmul_parallel(a, b);
  return kernels::matmul_serial(a, b);
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.table(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const auto& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

PolyMatrix flip_matrix(VarTablePtr table, std::size_t n) {
  PolyMatrix p(table, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) p(i * n + k, k * n + i) = RatFunc(table, 1);
  return p;
}

PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  PolyMatrix r(a.table(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

namespace kernels {

namespace {
void product_row(const PolyMatrix& a, const PolyMatrix& b, PolyMatrix& r, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const auto& x = a(i, k);
    if (x.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto& y = b(k, j);
      if (!y.is_zero()) r(i, j) += x * y;
    }
  }
}
}  // namespace

PolyMatrix matmul_serial(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(a.table(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, r, i);
  return r;
}

PolyMatrix matmul_parallel(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix r(a.table(), a.rows(), b.cols());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) product_row(a, b, r, static_cast<std::size_t>(i));
  return r;
}

}  // namespace kernels

namespace {

LaurentPoly lcm_poly(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_constant()) return a;
  if (a.is_constant()) return b;
  LaurentPoly g = poly_gcd(a, b);
  return a * divide_exact(b, g, "internal: gcd does not divide");
}

std::vector<LaurentPoly> polynomial_row(const PolyMatrix& m, std::size_t i) {
  LaurentPoly l(m.table(), 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(i, j).is_zero()) l = lcm_poly(l, m(i, j).den());
  std::vector<LaurentPoly> row;
  row.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& e = m(i, j);
    if (e.is_zero())
      row.emplace_back(m.table());
    else
      row.push_back(e.num() * divide_exact(l, e.den(), "internal: lcm not divisible"));
  }
  return row;
}

}  // namespace

EchelonForm fraction_free_echelon(const PolyMatrix& m) {
  std::vector<std::vector<LaurentPoly>> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(polynomial_row(m, i));
  EchelonForm out;
  LaurentPoly prev(m.table(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t best = a.size();
    for (std::size_t i = r; i < a.size(); ++i)
      if (!a[i][c].is_zero() && (best == a.size() || a[i][c].size() < a[best][c].size())) best = i;
    if (best == a.size()) continue;
    std::swap(a[r], a[best]);
    const LaurentPoly& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      LaurentPoly f = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        LaurentPoly v = piv * a[i][j];
        if (!f.is_zero() && !a[r][j].is_zero()) v -= f * a[r][j];
        a[i][j] = divide_exact(v, prev, "internal: Bareiss division failed");
      }
      a[i][c] = LaurentPoly(m.table());
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t PolyMatrix::rank() const { return fraction_free_echelon(*this).pivots.size(); }

std::vector<RatVector> PolyMatrix::nullspace() const {
  EchelonForm ef = fraction_free_echelon(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols_, RatFunc(table_));
    x[f] = RatFunc(table_, 1);
    for (std::size_t r = ef.pivots.size(); r-- > 0;) {
      std::size_t p = ef.pivots[r];
      RatFunc s(table_);
      for (std::size_t j = p + 1; j < cols_; ++j)
        if (!x[j].is_zero() && !ef.rows[r][j].is_zero()) s += RatFunc(ef.rows[r][j]) * x[j];
      if (!s.is_zero()) x[p] = -s / RatFunc(ef.rows[r][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<PolyMatrix> PolyMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  PolyMatrix a = *this;
  PolyMatrix inv = identity(table_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = c; i < n; ++i) {
      const auto& e = a(i, c);
      if (e.is_zero()) continue;
      if (best == n || e.num().size() + e.den().size() < a(best, c).num().size() + a(best, c).den().size())
        best = i;
    }
    if (best == n) return std::nullopt;
    if (best != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(best, j), a(c, j));
        std::swap(inv(best, j), inv(c, j));
      }
    RatFunc pinv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= pinv;
      if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      RatFunc f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace qsymm
