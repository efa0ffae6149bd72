#pragma once

#include "nilcurv/eig.hpp"
#include "nilcurv/skew.hpp"
#include "nilcurv/space.hpp"

#include <cstddef>
#include <vector>

namespace nilcurv {

struct SymMinusReport {
  std::size_t dim = 0;        // n(n-1)/2
  std::size_t sig_minus = 0;  // q(n-q)
  std::size_t sig_plus = 0;   // (n(n-1) + 2q(q-n)) / 2
  bool operator==(const SymMinusReport&) const = default;
};

/// Basis of Sym^-(V): G^{-1}(E_ij - E_ji) for i < j. Skewness is immediate
/// since G times each element is antisymmetric.
template <class S>
std::vector<Matrix<S>> sym_minus_basis(const PseudoEuclideanSpace<S>& space) {
  const std::size_t n = space.dim();
  std::vector<Matrix<S>> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix<S> omega(n, n);
      omega(i, j) = S(1);
      omega(j, i) = S(-1);
      out.push_back(space.gram_inverse() * omega);
    }
  return out;
}

/// Gram matrix of <J,K>* = -tr(JK) on the Sym^- basis above.
template <class S>
Matrix<S> star_gram(const PseudoEuclideanSpace<S>& space) {
  auto basis = sym_minus_basis(space);
  const std::size_t N = basis.size();
  Matrix<S> g(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      S v = -(basis[a] * basis[b]).trace();
      g(a, b) = v;
      g(b, a) = v;
    }
  return g;
}

/// Dimension and signature of (Sym^-(V), <,>*), eigenvalues counted
/// numerically with zero threshold tol * ||Gram||.
template <class S>
SymMinusReport sym_minus_signature(const PseudoEuclideanSpace<S>& space,
                                   double tol = kDefaultTol) {
  if (space.dim() < 2)
    throw dimension_error("Sym^- is trivial below dimension 2");
  const Matrix<S> g = star_gram(space);
  auto eigs = symmetric_eigenvalues(to_double(g));
  auto counts = count_eigen_signs(eigs, tol * std::max(1.0, g.max_abs_d()));
  if (counts.zero != 0)
    throw consistency_error("trace pairing on Sym^- appears degenerate");
  return SymMinusReport{g.rows(), counts.negative, counts.positive};
}

}  // namespace nilcurv
