#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spgeo/upoly.hpp"

namespace spgeo {

// Dense row-major matrix over a commutative ring R. R needs R(long),
// default construction as zero, + - *, is_zero() and an exact_div overload
// (the latter only for det).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
      throw std::invalid_argument("matrix entry count does not match shape");
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<std::vector<R>>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      if (static_cast<int>(cols[static_cast<size_t>(j)].size()) != m.rows_)
        throw std::invalid_argument("ragged column list");
      for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<R>& entries() const { return e_; }
  R& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const R& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<R> column(int j) const {
    std::vector<R> c(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<size_t>(i)] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    same_shape(a, b);
    for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    same_shape(a, b);
    for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] -= b.e_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const R& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend std::vector<R> operator*(const Matrix& a, const std::vector<R>& x) {
    if (static_cast<int>(x.size()) != a.cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<R> r(static_cast<size_t>(a.rows_));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) r[static_cast<size_t>(i)] += a(i, k) * x[static_cast<size_t>(k)];
    return r;
  }
  Matrix scaled(const R& k) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * k;
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  template <class F>
  auto map(F f) const {
    using D = decltype(f(std::declval<R>()));
    std::vector<D> r;
    r.reserve(e_.size());
    for (const auto& x : e_) r.push_back(f(x));
    return Matrix<D>(rows_, cols_, std::move(r));
  }
  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return m;
  }

 private:
  static void same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<R> e_;
};

inline constexpr int kMaxDenseSize = 16;

// Fraction-free (Bareiss) determinant. Every division is exact in R; a failed
// division means R is not an integral domain for these inputs and throws.
template <class R>
R det(Matrix<R> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return R();
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("Bareiss step: inexact division");
        m(i, j) = std::move(*q);
      }
      m(i, k) = R();
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

// Characteristic polynomial det(uI - m), ascending coefficients, by the
// division-free Berkowitz recursion over leading principal submatrices.
template <class R>
UPoly<R> charpoly(const Matrix<R>& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  std::vector<R> vec{R(1)};  // descending coefficients of the current principal minor's charpoly
  for (int r = 0; r < n; ++r) {
    std::vector<R> col(static_cast<size_t>(r) + 2);
    col[0] = R(1);
    col[1] = -m(r, r);
    std::vector<R> x(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) x[static_cast<size_t>(i)] = m(i, r);
    for (int k = 0; k < r; ++k) {
      R dot;
      for (int j = 0; j < r; ++j) dot += m(r, j) * x[static_cast<size_t>(j)];
      col[static_cast<size_t>(k) + 2] = -dot;
      std::vector<R> nx(static_cast<size_t>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) nx[static_cast<size_t>(i)] += m(i, j) * x[static_cast<size_t>(j)];
      x = std::move(nx);
    }
    std::vector<R> next(static_cast<size_t>(r) + 2);
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j <= std::min(i, vec.size() - 1); ++j) next[i] += col[i - j] * vec[j];
    vec = std::move(next);
  }
  return UPoly<R>(std::vector<R>(vec.rbegin(), vec.rend()));
}

// det(I - m*u) = u^n charpoly(m)(1/u).
template <class R>
UPoly<R> det_one_minus(const Matrix<R>& m) {
  return charpoly(m).reversed(m.rows());
}

// p(m) by Horner; used for Cayley-Hamilton checks.
template <class R>
Matrix<R> eval_at_matrix(const UPoly<R>& p, const Matrix<R>& m) {
  Matrix<R> acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) acc = acc * m + Matrix<R>::identity(m.rows()).scaled(p.coeff(k));
  return acc;
}

}  // namespace spgeo
