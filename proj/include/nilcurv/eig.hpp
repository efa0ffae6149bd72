#pragma once

#include "nilcurv/matrix.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <utility>
#include <vector>

namespace nilcurv {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
  Matrix<double> m(static_cast<std::size_t>(e.rows()),
                   static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> symmetric_eigenvalues(const Matrix<double>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m),
                                                        Eigen::EigenvaluesOnly);
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return out;
}

/// Eigenvalues (ascending) and the matrix whose columns are the matching
/// orthonormal eigenvectors.
inline std::pair<std::vector<double>, Matrix<double>> symmetric_eigensystem(
    const Matrix<double>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m));
  std::vector<double> vals(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    vals[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return {std::move(vals), from_eigen(solver.eigenvectors())};
}

struct EigenSignCounts {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;
};

inline EigenSignCounts count_eigen_signs(const std::vector<double>& eigs,
                                         double zero_threshold) {
  EigenSignCounts c;
  for (double v : eigs) {
    if (v < -zero_threshold)
      ++c.negative;
    else if (v > zero_threshold)
      ++c.positive;
    else
      ++c.zero;
  }
  return c;
}

}  // namespace nilcurv
