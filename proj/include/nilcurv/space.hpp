#pragma once

#include "nilcurv/eig.hpp"
#include "nilcurv/errors.hpp"
#include "nilcurv/matrix.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace nilcurv {

/// Signature (q, n-q): q negative directions in an n-dimensional space.
/// The convention q <= n - q is enforced throughout.
struct Signature {
  std::size_t q = 0;
  std::size_t n = 0;
  std::size_t plus() const { return n - q; }
  bool operator==(const Signature&) const = default;
};

inline void validate_signature(Signature sig) {
  if (sig.n == 0) throw dimension_error("space dimension must be positive");
  if (2 * sig.q > sig.n)
    throw dimension_error("invalid signature: 2q exceeds the dimension");
}

/// Gram matrix of the distinguished pseudo-Euclidean basis
/// (e_1, ebar_1, ..., e_q, ebar_q, f_1, ..., f_{n-2q}): q hyperbolic
/// 2x2 blocks [[0,1],[1,0]] followed by an identity block.
template <class S>
Matrix<S> canonical_gram(Signature sig) {
  validate_signature(sig);
  Matrix<S> g(sig.n, sig.n);
  for (std::size_t i = 0; i < sig.q; ++i) {
    g(2 * i, 2 * i + 1) = S(1);
    g(2 * i + 1, 2 * i) = S(1);
  }
  for (std::size_t i = 2 * sig.q; i < sig.n; ++i) g(i, i) = S(1);
  return g;
}

/// A pseudo-Euclidean vector space: a signature together with the Gram matrix
/// of the inner product in the working basis. `make_space` produces the
/// canonical pseudo-Euclidean basis; spaces obtained from basis changes may
/// carry an arbitrary symmetric invertible Gram with q negative eigenvalues.
template <class S>
class PseudoEuclideanSpace {
 public:
  PseudoEuclideanSpace(Signature sig, Matrix<S> gram, double tol = kDefaultTol)
      : sig_(sig), gram_(std::move(gram)) {
    validate_signature(sig_);
    if (gram_.rows() != sig_.n || gram_.cols() != sig_.n)
      throw dimension_error("gram matrix shape does not match the dimension");
    if (!gram_.is_symmetric(tol)) throw dimension_error("gram matrix is not symmetric");
    gram_inv_ = inverse(gram_, tol);  // throws singular_error when degenerate
    auto eigs = symmetric_eigenvalues(to_double(gram_));
    auto counts =
        count_eigen_signs(eigs, tol * std::max(1.0, gram_.max_abs_d()));
    if (counts.negative != sig_.q || counts.zero != 0)
      throw dimension_error("gram matrix does not have signature (" +
                            std::to_string(sig_.q) + ", " +
                            std::to_string(sig_.n - sig_.q) + ")");
    canonical_ = (gram_ - canonical_gram<S>(sig_)).is_zero(tol);
  }

  std::size_t dim() const { return sig_.n; }
  Signature signature() const { return sig_; }
  const Matrix<S>& gram() const { return gram_; }
  const Matrix<S>& gram_inverse() const { return gram_inv_; }

  /// True when the working basis is the distinguished pseudo-Euclidean one.
  bool has_canonical_basis() const { return canonical_; }

  bool is_euclidean() const { return sig_.q == 0; }

  S inner(const Vec<S>& u, const Vec<S>& v) const {
    return dot(u, gram_ * v);
  }

  bool operator==(const PseudoEuclideanSpace& o) const {
    return sig_ == o.sig_ && gram_ == o.gram_;
  }

 private:
  Signature sig_;
  Matrix<S> gram_;
  Matrix<S> gram_inv_;
  bool canonical_ = false;
};

template <class S>
PseudoEuclideanSpace<S> make_space(std::size_t q, std::size_t n) {
  Signature sig{q, n};
  validate_signature(sig);
  return PseudoEuclideanSpace<S>(sig, canonical_gram<S>(sig));
}

template <class S>
PseudoEuclideanSpace<S> make_space(Signature sig, Matrix<S> gram,
                                   double tol = kDefaultTol) {
  return PseudoEuclideanSpace<S>(sig, std::move(gram), tol);
}

inline PseudoEuclideanSpace<double> to_double(
    const PseudoEuclideanSpace<Rational>& sp) {
  return PseudoEuclideanSpace<double>(sp.signature(), to_double(sp.gram()));
}

}  // namespace nilcurv
