#pragma once

#include "nilcurv/matrix.hpp"
#include "nilcurv/space.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nilcurv {

/// An endomorphism J with <Ju, v> = -<u, Jv>, stored as its matrix in the
/// space's working basis.
template <class S>
struct SkewEndomorphism {
  PseudoEuclideanSpace<S> space;
  Matrix<S> mat;
};

/// Skewness test: J^T G + G J = 0 up to tol (exact in rational mode).
template <class S>
bool is_skew(const Matrix<S>& mat, const PseudoEuclideanSpace<S>& space,
             double tol = kDefaultTol) {
  if (mat.rows() != space.dim() || mat.cols() != space.dim())
    throw dimension_error("endomorphism dimension mismatch");
  const Matrix<S> residual =
      mat.transpose() * space.gram() + space.gram() * mat;
  const double scale =
      std::max(1.0, mat.max_abs_d() * space.gram().max_abs_d());
  return residual.is_zero(tol * scale);
}

template <class S>
bool is_skew(const SkewEndomorphism<S>& j, double tol = kDefaultTol) {
  return is_skew(j.mat, j.space, tol);
}

template <class S>
SkewEndomorphism<S> make_skew(const PseudoEuclideanSpace<S>& space,
                              Matrix<S> mat, double tol = kDefaultTol) {
  if (!is_skew(mat, space, tol))
    throw consistency_error("matrix is not skew with respect to the metric");
  return SkewEndomorphism<S>{space, std::move(mat)};
}

template <class S>
void check_same_space(const PseudoEuclideanSpace<S>& a,
                      const PseudoEuclideanSpace<S>& b) {
  if (!(a == b)) throw dimension_error("operands live in different spaces");
}

/// <J, K>* = -tr(J K), the trace pairing on Sym^-(V).
template <class S>
S star_product(const SkewEndomorphism<S>& j, const SkewEndomorphism<S>& k) {
  check_same_space(j.space, k.space);
  return -(j.mat * k.mat).trace();
}

/// The pseudo-Euclidean pairing of signature (q,q) on R^{2q}:
/// <(x_1,y_1,...), (x'_1,y'_1,...)>_q = sum_i (x_i y'_i + y_i x'_i).
template <class S>
S qdot(const Vec<S>& u, const Vec<S>& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw dimension_error("qdot needs two vectors of equal even length");
  S r(0);
  for (std::size_t i = 0; 2 * i < u.size(); ++i)
    r += u[2 * i] * v[2 * i + 1] + u[2 * i + 1] * v[2 * i];
  return r;
}

/// Block data of a skew endomorphism in the distinguished basis:
///
///   Mat(J) = [ A  P ]   with P row pairs (-X_i, -Y_i) and Phat column pairs
///            [ Ph B ]   (Y_i, X_i); B is Euclidean-skew and A is skew for
///                       the (q,q) pairing, i.e. its 2x2 blocks satisfy
///                       A_ii = diag(a_i, -a_i) and
///                       A_ji = [[-d,-b],[-c,-a]] against A_ij = [[a,b],[c,d]].
template <class S>
struct SkewRepresentation {
  Signature sig;
  Matrix<S> A;              // 2q x 2q
  Matrix<S> B;              // (n-2q) x (n-2q)
  std::vector<Vec<S>> X;    // q vectors in R^{n-2q}
  std::vector<Vec<S>> Y;    // q vectors in R^{n-2q}

  /// V_l = (y_l^1, x_l^1, ..., y_l^q, x_l^q), the l-th row of Phat viewed in
  /// R^{(q,q)}.
  Vec<S> v_row(std::size_t l) const {
    Vec<S> v(2 * sig.q, S(0));
    for (std::size_t i = 0; i < sig.q; ++i) {
      v[2 * i] = Y[i][l];
      v[2 * i + 1] = X[i][l];
    }
    return v;
  }
};

/// Structural checks on the block data; returns the violated constraints.
template <class S>
std::vector<std::string> validate_representation(const SkewRepresentation<S>& rep,
                                                 double tol = kDefaultTol) {
  std::vector<std::string> out;
  const std::size_t q = rep.sig.q, m = rep.sig.n - 2 * rep.sig.q;
  if (rep.A.rows() != 2 * q || rep.A.cols() != 2 * q ||
      rep.B.rows() != m || rep.B.cols() != m || rep.X.size() != q ||
      rep.Y.size() != q) {
    out.push_back("representation block shapes do not match the signature");
    return out;
  }
  for (std::size_t i = 0; i < q; ++i)
    if (rep.X[i].size() != m || rep.Y[i].size() != m) {
      out.push_back("X/Y vector length differs from n-2q");
      return out;
    }
  const double sa = tol * std::max(1.0, rep.A.max_abs_d());
  auto near_a = [&](const S& x, const S& y) {
    return scalar_traits<S>::is_zero(x - y, sa);
  };
  for (std::size_t i = 0; i < q; ++i) {
    if (!near_a(rep.A(2 * i, 2 * i + 1), S(0)) ||
        !near_a(rep.A(2 * i + 1, 2 * i), S(0)) ||
        !near_a(rep.A(2 * i, 2 * i), -rep.A(2 * i + 1, 2 * i + 1)))
      out.push_back("A diagonal block " + std::to_string(i + 1) +
                    " is not diag(a, -a)");
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j) {
      if (!near_a(rep.A(2 * j, 2 * i), -rep.A(2 * i + 1, 2 * j + 1)) ||
          !near_a(rep.A(2 * j, 2 * i + 1), -rep.A(2 * i, 2 * j + 1)) ||
          !near_a(rep.A(2 * j + 1, 2 * i), -rep.A(2 * i + 1, 2 * j)) ||
          !near_a(rep.A(2 * j + 1, 2 * i + 1), -rep.A(2 * i, 2 * j)))
        out.push_back("A blocks (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + ") violate the pairing symmetry");
    }
  if (!rep.B.is_antisymmetric(tol * std::max(1.0, rep.B.max_abs_d())))
    out.push_back("B is not Euclidean-skew");
  return out;
}

/// Extract the block representation of a skew endomorphism. Requires the
/// distinguished (canonical) basis.
template <class S>
SkewRepresentation<S> representation_of(const SkewEndomorphism<S>& j,
                                        double tol = kDefaultTol) {
  if (!j.space.has_canonical_basis())
    throw dimension_error(
        "block representation requires the canonical pseudo-Euclidean basis");
  if (!is_skew(j, tol))
    throw consistency_error("endomorphism is not skew");
  const Signature sig = j.space.signature();
  const std::size_t q = sig.q, m = sig.n - 2 * q;
  SkewRepresentation<S> rep{sig, j.mat.block(0, 0, 2 * q, 2 * q),
                            j.mat.block(2 * q, 2 * q, m, m), {}, {}};
  const Matrix<S> P = j.mat.block(0, 2 * q, 2 * q, m);
  for (std::size_t i = 0; i < q; ++i) {
    rep.X.push_back(-P.row(2 * i));
    rep.Y.push_back(-P.row(2 * i + 1));
  }
  return rep;
}

/// Assemble the skew endomorphism from its block data.
template <class S>
SkewEndomorphism<S> skew_from_representation(const SkewRepresentation<S>& rep,
                                             const PseudoEuclideanSpace<S>& space,
                                             double tol = kDefaultTol) {
  if (!space.has_canonical_basis())
    throw dimension_error(
        "block representation requires the canonical pseudo-Euclidean basis");
  if (!(space.signature() == rep.sig))
    throw dimension_error("representation signature does not match the space");
  if (auto bad = validate_representation(rep, tol); !bad.empty())
    throw consistency_error("invalid representation: " + bad.front());
  const std::size_t q = rep.sig.q, m = rep.sig.n - 2 * q, n = rep.sig.n;
  Matrix<S> mat(n, n);
  mat.set_block(0, 0, rep.A);
  mat.set_block(2 * q, 2 * q, rep.B);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t l = 0; l < m; ++l) {
      mat(2 * i, 2 * q + l) = -rep.X[i][l];
      mat(2 * i + 1, 2 * q + l) = -rep.Y[i][l];
      mat(2 * q + l, 2 * i) = rep.Y[i][l];
      mat(2 * q + l, 2 * i + 1) = rep.X[i][l];
    }
  return make_skew(space, std::move(mat), tol);
}

/// tr(J_1 J_2) computed from block data only:
///
///   tr J1J2 = 2 sum_i a_i^1 a_i^2
///             - 2 sum_{l<k} (a_lk^1 d_lk^2 + d_lk^1 a_lk^2
///                            + b_lk^1 c_lk^2 + c_lk^1 b_lk^2)
///             - 2 sum_l (X_l^1 . Y_l^2 + X_l^2 . Y_l^1) + tr B_1 B_2.
template <class S>
S trace_pair_formula(const SkewRepresentation<S>& r1,
                     const SkewRepresentation<S>& r2) {
  if (!(r1.sig == r2.sig))
    throw dimension_error("representations live in different spaces");
  const std::size_t q = r1.sig.q;
  S t(0);
  for (std::size_t i = 0; i < q; ++i)
    t += S(2) * r1.A(2 * i, 2 * i) * r2.A(2 * i, 2 * i);
  for (std::size_t l = 0; l < q; ++l)
    for (std::size_t k = l + 1; k < q; ++k) {
      const S a1 = r1.A(2 * l, 2 * k), b1 = r1.A(2 * l, 2 * k + 1);
      const S c1 = r1.A(2 * l + 1, 2 * k), d1 = r1.A(2 * l + 1, 2 * k + 1);
      const S a2 = r2.A(2 * l, 2 * k), b2 = r2.A(2 * l, 2 * k + 1);
      const S c2 = r2.A(2 * l + 1, 2 * k), d2 = r2.A(2 * l + 1, 2 * k + 1);
      t -= S(2) * (a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2);
    }
  for (std::size_t l = 0; l < q; ++l)
    t -= S(2) * (dot(r1.X[l], r2.Y[l]) + dot(r2.X[l], r1.Y[l]));
  t += (r1.B * r2.B).trace();
  return t;
}

}  // namespace nilcurv
