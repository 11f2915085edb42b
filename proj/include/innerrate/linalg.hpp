#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "innerrate/errors.hpp"
#include "innerrate/numeric.hpp"

namespace innerrate {

using RatVec = std::vector<Rat>;

/// Dense row-major integer matrix. Everything here is desk scale
/// (intersection matrices of dual graphs, well under 100x100).
class IntMat {
 public:
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  IntMat leading_minor(std::size_t k) const {
    IntMat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.at(i, j) = at(i, j);
    return m;
  }

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

inline RatVec operator*(const IntMat& m, const RatVec& x) {
  if (x.size() != m.cols()) throw DimensionMismatch("matrix-vector size mismatch");
  RatVec y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += Rat(m.at(i, j)) * x[j];
  return y;
}

/// Exact determinant via Bareiss fraction-free elimination.
inline Int determinant(const IntMat& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

/// Solves M x = b exactly over the rationals. Gaussian elimination with
/// largest-magnitude rational pivot; matrices are tiny, so no fancier
/// scheme is warranted.
inline RatVec solve_exact(const IntMat& m, const RatVec& b) {
  if (!m.is_square()) throw DimensionMismatch("solve_exact needs a square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) throw DimensionMismatch("solve_exact rhs length mismatch");

  // Augmented rational system.
  std::vector<RatVec> a(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n] = b[i];
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (rat_abs(a[i][k]) > rat_abs(a[pivot][k])) pivot = i;
    if (a[pivot][k] == 0) throw SingularMatrix("matrix is singular");
    std::swap(a[k], a[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }

  RatVec x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Sylvester criterion: leading principal minors alternate in sign
/// starting negative. A zero minor fails.
inline bool is_negative_definite(const IntMat& m) {
  if (!m.is_symmetric()) throw NotSymmetric("is_negative_definite needs a symmetric matrix");
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Int d = determinant(m.leading_minor(k));
    if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
  }
  return true;
}

}  // namespace innerrate
