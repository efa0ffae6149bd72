#pragma once

#include "nilcurv/eig.hpp"
#include "nilcurv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace nilcurv {

/// Result of bringing a Euclidean-skew matrix to its 2x2 rotation-block form:
/// in the orthonormal basis given by the columns of `basis`, the matrix is
/// blockdiag([[0,-angle_1],[angle_1,0]], ..., 0) with 0 < angle_1 <= ... .
/// The first 2r columns are the rotation planes (u_k, B u_k / angle_k), the
/// rest span the kernel.
struct SkewNormalForm {
  std::vector<double> angles;
  Matrix<double> basis;
};

namespace detail {

inline void sign_normalize(Vec<double>& v, double tol) {
  for (double x : v) {
    if (std::fabs(x) > tol) {
      if (x < 0)
        for (auto& y : v) y = -y;
      return;
    }
  }
}

inline void project_out(Vec<double>& v, const Vec<double>& unit) {
  double c = dot(v, unit);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * unit[i];
}

inline double norm(const Vec<double>& v) { return std::sqrt(dot(v, v)); }

}  // namespace detail

/// Rotation angles and diagonalizing orthonormal basis of a Euclidean-skew
/// matrix. Angles come out ascending; equal angles keep construction order,
/// and each plane vector u is sign-normalized (first nonzero component
/// positive) so the output is deterministic.
inline SkewNormalForm euclidean_skew_normal_form(const Matrix<double>& b,
                                                 double tol = kDefaultTol) {
  if (!b.square()) throw dimension_error("skew normal form needs a square matrix");
  const double scale = std::max(1.0, b.max_abs_d());
  if (!b.is_antisymmetric(tol * scale))
    throw consistency_error("matrix is not Euclidean-skew");
  const std::size_t n = b.rows();

  // -B^2 is symmetric PSD with eigenvalues angle^2 (doubled) and 0.
  auto [vals, vecs] = symmetric_eigensystem(-(b * b));
  const double zero_thresh = tol * std::max(1.0, scale * scale);

  SkewNormalForm out;
  out.basis = Matrix<double>(n, n);
  std::vector<Vec<double>> chosen;  // all accepted basis columns so far
  std::vector<Vec<double>> plane_cols;
  std::vector<Vec<double>> kernel_cols;

  for (std::size_t k = 0; k < n; ++k) {
    double lam2 = vals[k];
    Vec<double> u = vecs.col(k);
    // Remove components along the planes already extracted; for multiplicity
    // > 2 eigenvalues the partner vector B u / angle also lives in the same
    // eigenspace and must be projected away.
    for (const auto& c : chosen) detail::project_out(u, c);
    double nu = detail::norm(u);
    if (nu <= std::sqrt(zero_thresh)) continue;  // already covered by a plane
    for (auto& x : u) x /= nu;
    detail::sign_normalize(u, tol);
    if (lam2 <= zero_thresh) {
      kernel_cols.push_back(u);
      chosen.push_back(u);
      continue;
    }
    const double angle = std::sqrt(lam2);
    Vec<double> v = b * u;
    for (auto& x : v) x /= angle;
    out.angles.push_back(angle);
    plane_cols.push_back(u);
    plane_cols.push_back(v);
    chosen.push_back(u);
    chosen.push_back(v);
  }

  std::size_t col = 0;
  for (const auto& pc : plane_cols) out.basis.set_col(col++, pc);
  for (const auto& kc : kernel_cols) out.basis.set_col(col++, kc);
  return out;
}

}  // namespace nilcurv
