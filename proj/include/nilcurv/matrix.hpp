#pragma once

#include "nilcurv/errors.hpp"
#include "nilcurv/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace nilcurv {

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> zero_vec(std::size_t n) {
  return Vec<S>(n, S(0));
}

template <class S>
Vec<S> unit_vec(std::size_t n, std::size_t i) {
  Vec<S> v(n, S(0));
  v[i] = S(1);
  return v;
}

template <class S>
Vec<S> operator+(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw dimension_error("vector size mismatch");
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw dimension_error("vector size mismatch");
  Vec<S> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& a) {
  Vec<S> r(a);
  for (auto& x : r) x = -x;
  return r;
}

template <class S>
Vec<S> operator*(const S& c, const Vec<S>& a) {
  Vec<S> r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// y += c*x
template <class S>
void axpy(Vec<S>& y, const S& c, const Vec<S>& x) {
  if (y.size() != x.size()) throw dimension_error("vector size mismatch");
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

/// Plain coefficient dot product (no metric).
template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw dimension_error("vector size mismatch");
  S r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

template <class S>
double max_abs_d(const Vec<S>& a) {
  double m = 0.0;
  for (const auto& x : a) m = std::max(m, abs_d(x));
  return m;
}

template <class S>
bool is_zero_vec(const Vec<S>& a, double tol) {
  for (const auto& x : a)
    if (!scalar_traits<S>::is_zero(x, tol)) return false;
  return true;
}

/// Dense row-major matrix over the scalar S.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), d_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw dimension_error("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const {
    return d_[r * cols_ + c];
  }

  bool operator==(const Matrix&) const = default;

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  S trace() const {
    if (!square()) throw dimension_error("trace of non-square matrix");
    S t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] -= o.d_[i];
    return r;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.d_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (scalar_traits<S>::is_exact && a == S(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  friend Matrix operator*(const S& c, const Matrix& m) {
    Matrix r(m);
    for (auto& x : r.d_) x *= c;
    return r;
  }

  friend Vec<S> operator*(const Matrix& m, const Vec<S>& v) {
    if (m.cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
    Vec<S> r(m.rows_, S(0));
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Vec<S> row(std::size_t i) const {
    Vec<S> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  Vec<S> col(std::size_t j) const {
    Vec<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_row(std::size_t i, const Vec<S>& v) {
    if (v.size() != cols_) throw dimension_error("row size mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void set_col(std::size_t j, const Vec<S>& v) {
    if (v.size() != rows_) throw dimension_error("column size mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  double max_abs_d() const {
    double m = 0.0;
    for (const auto& x : d_) m = std::max(m, nilcurv::abs_d(x));
    return m;
  }

  bool is_zero(double tol) const {
    for (const auto& x : d_)
      if (!scalar_traits<S>::is_zero(x, tol)) return false;
    return true;
  }

  bool is_symmetric(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!near((*this)(i, j), (*this)(j, i), tol)) return false;
    return true;
  }

  bool is_antisymmetric(double tol) const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (!scalar_traits<S>::is_zero((*this)(i, j) + (*this)(j, i), tol))
          return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw dimension_error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> d_;
};

template <class S>
Matrix<S> matrix_from_columns(std::size_t n, const std::vector<Vec<S>>& cols) {
  Matrix<S> m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

template <class S>
Matrix<S> matrix_from_rows_of(const std::vector<Vec<S>>& rows) {
  if (rows.empty()) return Matrix<S>();
  Matrix<S> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

inline Matrix<double> to_double(const Matrix<double>& m) { return m; }
inline Vec<double> to_double(const Vec<double>& v) { return v; }

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = scalar_traits<Rational>::to_double(m(i, j));
  return r;
}

inline Vec<double> to_double(const Vec<Rational>& v) {
  Vec<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = scalar_traits<Rational>::to_double(v[i]);
  return r;
}

// ---------------------------------------------------------------------------
// Rank-revealing Gauss-Jordan elimination. Pivots are exact nonzeros in
// rational mode and pass a tol*max(1, ||M||_inf) threshold in float mode.
// ---------------------------------------------------------------------------

template <class S>
struct RowReduction {
  Matrix<S> rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

template <class S>
RowReduction<S> row_reduce(Matrix<S> m, double tol = kDefaultTol) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const double thresh =
      scalar_traits<S>::is_exact ? 0.0 : tol * std::max(1.0, m.max_abs_d());
  RowReduction<S> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    double best_abs = abs_d(m(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      double a = abs_d(m(i, c));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    bool pivot_ok = scalar_traits<S>::is_exact
                        ? !scalar_traits<S>::is_zero(m(best, c), 0)
                        : best_abs > thresh;
    if (!pivot_ok) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
    const S piv = m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const S f = m(i, c);
      if (scalar_traits<S>::is_zero(f, 0) && scalar_traits<S>::is_exact) continue;
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
      m(i, c) = S(0);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

template <class S>
std::size_t rank(const Matrix<S>& m, double tol = kDefaultTol) {
  return row_reduce(m, tol).rank();
}

/// Basis of the null space {x : Mx = 0}, one vector per free column.
template <class S>
std::vector<Vec<S>> kernel_basis(const Matrix<S>& m, double tol = kDefaultTol) {
  auto red = row_reduce(m, tol);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Vec<S> v(cols, S(0));
    v[c] = S(1);
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
      v[red.pivot_cols[i]] = -red.rref(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m, double tol = kDefaultTol) {
  if (!m.square()) throw dimension_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<S>::identity(n));
  auto red = row_reduce(aug, tol);
  if (red.rank() < n || red.pivot_cols.back() >= n)
    throw singular_error("matrix is singular");
  return red.rref.block(0, n, n, n);
}

/// One particular solution of Mx = b (free variables set to zero), or nullopt
/// if the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve_linear(const Matrix<S>& m, const Vec<S>& b,
                                   double tol = kDefaultTol) {
  if (m.rows() != b.size()) throw dimension_error("solve shape mismatch");
  const std::size_t n = m.cols();
  Matrix<S> aug(m.rows(), n + 1);
  aug.set_block(0, 0, m);
  aug.set_col(n, b);
  auto red = row_reduce(aug, tol);
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == n)
    return std::nullopt;  // row [0 ... 0 | 1]
  Vec<S> x(n, S(0));
  for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
    x[red.pivot_cols[i]] = red.rref(i, n);
  return x;
}

/// rank of the span of a family of vectors.
template <class S>
std::size_t span_rank(const std::vector<Vec<S>>& vecs, double tol = kDefaultTol) {
  if (vecs.empty()) return 0;
  return rank(matrix_from_rows_of(vecs), tol);
}

/// True when the two families span the same subspace.
template <class S>
bool same_span(const std::vector<Vec<S>>& a, const std::vector<Vec<S>>& b,
               double tol = kDefaultTol) {
  std::size_t ra = span_rank(a, tol), rb = span_rank(b, tol);
  if (ra != rb) return false;
  std::vector<Vec<S>> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return span_rank(joint, tol) == ra;
}

}  // namespace nilcurv
