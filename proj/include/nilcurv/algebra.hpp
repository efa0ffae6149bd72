#pragma once

#include "nilcurv/matrix.hpp"
#include "nilcurv/skew.hpp"
#include "nilcurv/space.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace nilcurv {

/// A pseudo-Euclidean 2-step nilpotent Lie algebra in structure-endomorphism
/// form: a declared center basis (e_1,...,e_p) and skew maps (J_1,...,J_p)
/// with [u,v] = sum_i <J_i u, v> e_i. The declared center has to be the
/// actual one: the common kernel of the J_i equals span(e_1,...,e_p).
template <class S>
struct NilMetricAlgebra {
  PseudoEuclideanSpace<S> space;
  std::vector<Vec<S>> center;    // p linearly independent coordinate vectors
  std::vector<Matrix<S>> js;     // p structure endomorphisms

  std::size_t dim() const { return space.dim(); }
  std::size_t center_dim() const { return center.size(); }
};

inline NilMetricAlgebra<double> to_double(const NilMetricAlgebra<Rational>& a) {
  NilMetricAlgebra<double> out{to_double(a.space), {}, {}};
  for (const auto& c : a.center) out.center.push_back(to_double(c));
  for (const auto& j : a.js) out.js.push_back(to_double(j));
  return out;
}

template <class S>
Matrix<S> center_matrix(const NilMetricAlgebra<S>& alg) {
  return matrix_from_columns(alg.dim(), alg.center);
}

/// [u, v] = sum_i <J_i u, v> e_i; lands in span(center).
template <class S>
Vec<S> bracket(const NilMetricAlgebra<S>& alg, const Vec<S>& u, const Vec<S>& v) {
  if (u.size() != alg.dim() || v.size() != alg.dim())
    throw dimension_error("bracket operand dimension mismatch");
  Vec<S> out(alg.dim(), S(0));
  const Vec<S> gv = alg.space.gram() * v;
  for (std::size_t i = 0; i < alg.js.size(); ++i) {
    const S c = dot(alg.js[i] * u, gv);
    axpy(out, c, alg.center[i]);
  }
  return out;
}

/// Diagnostic validation; empty result means every invariant holds.
template <class S>
std::vector<std::string> validate(const NilMetricAlgebra<S>& alg,
                                  double tol = kDefaultTol) {
  std::vector<std::string> out;
  const std::size_t n = alg.dim(), p = alg.center_dim();
  if (p == 0 || p > n) {
    out.push_back("declared center is empty or larger than the space");
    return out;
  }
  if (alg.js.size() != p) {
    out.push_back("number of structure endomorphisms differs from dim center");
    return out;
  }
  for (const auto& c : alg.center)
    if (c.size() != n) {
      out.push_back("center vector dimension mismatch");
      return out;
    }
  for (const auto& j : alg.js)
    if (j.rows() != n || j.cols() != n) {
      out.push_back("structure endomorphism dimension mismatch");
      return out;
    }

  if (span_rank(alg.center, tol) != p)
    out.push_back("declared center basis is linearly dependent");

  for (std::size_t i = 0; i < p; ++i)
    if (!is_skew(alg.js[i], alg.space, tol))
      out.push_back("structure endomorphism J" + std::to_string(i + 1) +
                    " is not metric-skew");

  for (std::size_t i = 0; i < p; ++i) {
    double scale = std::max(1.0, alg.js[i].max_abs_d());
    for (std::size_t k = 0; k < p; ++k)
      if (!is_zero_vec(alg.js[i] * alg.center[k], tol * scale)) {
        out.push_back("structure endomorphism J" + std::to_string(i + 1) +
                      " does not vanish on the declared center");
        break;
      }
  }

  // Common kernel of the stacked J's must equal the declared center.
  Matrix<S> stacked(n * p, n);
  for (std::size_t i = 0; i < p; ++i)
    stacked.set_block(i * n, 0, alg.js[i]);
  auto kern = kernel_basis(stacked, tol);
  if (!same_span(kern, alg.center, tol))
    out.push_back(
        "common kernel of the structure endomorphisms differs from the "
        "declared center");

  // Derived ideal inside the center span (automatic from the bracket formula,
  // asserted anyway) and nontrivial (the algebra must be nonabelian).
  bool any_bracket = false;
  std::vector<Vec<S>> probe = alg.center;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec<S> br = bracket(alg, unit_vec<S>(n, a), unit_vec<S>(n, b));
      if (is_zero_vec(br, tol)) continue;
      any_bracket = true;
      probe.push_back(std::move(br));
    }
  if (!any_bracket)
    out.push_back("derived ideal is trivial (abelian algebra)");
  else if (span_rank(probe, tol) != p)
    out.push_back("bracket image escapes the declared center span");

  return out;
}

template <class S>
NilMetricAlgebra<S> make_algebra(PseudoEuclideanSpace<S> space,
                                 std::vector<Vec<S>> center,
                                 std::vector<Matrix<S>> js,
                                 double tol = kDefaultTol) {
  NilMetricAlgebra<S> alg{std::move(space), std::move(center), std::move(js)};
  if (auto bad = validate(alg, tol); !bad.empty())
    throw invalid_algebra_error(std::move(bad));
  return alg;
}

/// Rewrites the algebra over the center basis f_j = sum_i P(i,j) e_i.
/// New structure endomorphisms: K_j = sum_i (P^{-1})(j,i) J_i, so bracket
/// values are unchanged as elements of the space.
template <class S>
NilMetricAlgebra<S> change_center_basis(const NilMetricAlgebra<S>& alg,
                                        const Matrix<S>& passage,
                                        double tol = kDefaultTol) {
  const std::size_t p = alg.center_dim();
  if (passage.rows() != p || passage.cols() != p)
    throw dimension_error("passage matrix must be p x p");
  const Matrix<S> inv = inverse(passage, tol);  // singular_error if not invertible
  NilMetricAlgebra<S> out{alg.space, {}, {}};
  for (std::size_t j = 0; j < p; ++j) {
    Vec<S> f(alg.dim(), S(0));
    for (std::size_t i = 0; i < p; ++i) axpy(f, passage(i, j), alg.center[i]);
    out.center.push_back(std::move(f));
  }
  for (std::size_t j = 0; j < p; ++j) {
    Matrix<S> k(alg.dim(), alg.dim());
    for (std::size_t i = 0; i < p; ++i) k += inv(j, i) * alg.js[i];
    out.js.push_back(std::move(k));
  }
  return out;
}

template <class S>
struct Subspace {
  std::vector<Vec<S>> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Span of all bracket values [b_a, b_b]; its dimension is the paper's r.
template <class S>
Subspace<S> derived_ideal(const NilMetricAlgebra<S>& alg,
                          double tol = kDefaultTol) {
  const std::size_t n = alg.dim();
  std::vector<Vec<S>> gen;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec<S> br = bracket(alg, unit_vec<S>(n, a), unit_vec<S>(n, b));
      if (!is_zero_vec(br, tol)) gen.push_back(std::move(br));
    }
  if (gen.empty()) return {};
  auto red = row_reduce(matrix_from_rows_of(gen), tol);
  Subspace<S> out;
  for (std::size_t i = 0; i < red.rank(); ++i) out.basis.push_back(red.rref.row(i));
  return out;
}

/// Basis of the metric orthogonal {v : <v, w> = 0 for all w in span(vecs)}.
template <class S>
std::vector<Vec<S>> orthogonal_complement(const PseudoEuclideanSpace<S>& space,
                                          const std::vector<Vec<S>>& vecs,
                                          double tol = kDefaultTol) {
  if (vecs.empty()) {
    std::vector<Vec<S>> all;
    for (std::size_t i = 0; i < space.dim(); ++i)
      all.push_back(unit_vec<S>(space.dim(), i));
    return all;
  }
  Matrix<S> constraints =
      matrix_from_columns(space.dim(), vecs).transpose() * space.gram();
  return kernel_basis(constraints, tol);
}

namespace detail {

/// Pivoted Gram-Schmidt for a (possibly indefinite) nondegenerate restriction:
/// returns an orthogonal basis of span(vecs). When no remaining vector has
/// nonzero self-product, a hyperbolic pair u, w with <u,w> != 0 is merged into
/// u + w first.
template <class S>
std::vector<Vec<S>> orthogonalize(const PseudoEuclideanSpace<S>& space,
                                  std::vector<Vec<S>> work, double tol) {
  std::vector<Vec<S>> out;
  double scale = 1.0;
  for (const auto& v : work) scale = std::max(scale, max_abs_d(v));
  const double thresh = tol * scale * std::max(1.0, space.gram().max_abs_d());
  while (!work.empty()) {
    // Drop vectors that became (numerically) zero.
    std::vector<Vec<S>> keep;
    for (auto& v : work)
      if (!is_zero_vec(v, thresh)) keep.push_back(std::move(v));
    work = std::move(keep);
    if (work.empty()) break;

    std::size_t pick = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!scalar_traits<S>::is_zero(space.inner(work[i], work[i]), thresh)) {
        pick = i;
        break;
      }
    if (pick == work.size()) {
      // All self-products vanish; fix up with a hyperbolic pair.
      bool fixed = false;
      for (std::size_t i = 0; i < work.size() && !fixed; ++i)
        for (std::size_t j = i + 1; j < work.size() && !fixed; ++j)
          if (!scalar_traits<S>::is_zero(space.inner(work[i], work[j]), thresh)) {
            work[i] = work[i] + work[j];
            pick = i;
            fixed = true;
          }
      if (!fixed)
        throw consistency_error(
            "degenerate restriction encountered during orthogonalization");
    }
    Vec<S> u = work[pick];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
    const S uu = space.inner(u, u);
    for (auto& v : work) {
      const S c = space.inner(u, v) / uu;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace detail

/// The basis built in the Ricci-decomposition proof: isotropic pairs
/// (z_i, zbar_i) spanning the orthogonal of F + G, an orthogonal basis of a
/// complement F of z in the center, and an orthogonal basis of a complement G
/// in the center's orthogonal. In float mode F and G are normalized to
/// <f,f> = +/-1; in exact mode they stay orthogonal with rational norms
/// (normalizing would need square roots).
template <class S>
struct AdaptedBasis {
  std::vector<Vec<S>> isotropic;   // basis of center ∩ center^perp
  std::vector<Vec<S>> partners;    // Witt partners: <z_i, zbar_j> = delta_ij
  std::vector<Vec<S>> f;           // complement of the radical in the center
  std::vector<Vec<S>> g;           // complement of the radical in center^perp
  std::vector<S> f_norms;          // <f_i, f_i>
  std::vector<S> g_norms;          // <g_j, g_j>
  bool normalized = false;
};

template <class S>
AdaptedBasis<S> build_adapted_basis(const NilMetricAlgebra<S>& alg,
                                    double tol = kDefaultTol) {
  const auto& space = alg.space;
  const std::size_t n = alg.dim(), p = alg.center_dim();
  AdaptedBasis<S> out;

  // Radical of the center: z = C a with C^T G C a = 0.
  const Matrix<S> cmat = center_matrix(alg);
  const Matrix<S> center_gram = cmat.transpose() * space.gram() * cmat;
  for (const auto& a : kernel_basis(center_gram, tol))
    out.isotropic.push_back(cmat * a);
  const std::size_t qp = out.isotropic.size();

  // F: greedily extend the radical basis to the center, then orthogonalize.
  {
    std::vector<Vec<S>> have = out.isotropic;
    std::vector<Vec<S>> complement;
    for (std::size_t i = 0; i < p && have.size() < p; ++i) {
      auto trial = have;
      trial.push_back(alg.center[i]);
      if (span_rank(trial, tol) > span_rank(have, tol)) {
        have.push_back(alg.center[i]);
        complement.push_back(alg.center[i]);
      }
    }
    out.f = detail::orthogonalize(space, complement, tol);
  }

  // G: same construction inside the center's orthogonal.
  const auto zperp = orthogonal_complement(space, alg.center, tol);
  {
    std::vector<Vec<S>> have = out.isotropic;
    std::vector<Vec<S>> complement;
    const std::size_t target = zperp.size();
    for (std::size_t i = 0; i < zperp.size() && have.size() < target; ++i) {
      auto trial = have;
      trial.push_back(zperp[i]);
      if (span_rank(trial, tol) > span_rank(have, tol)) {
        have.push_back(zperp[i]);
        complement.push_back(zperp[i]);
      }
    }
    out.g = detail::orthogonalize(space, complement, tol);
  }

  // Witt partners inside W = (F + G)^perp: solve <z_i, w> = delta_ij on a
  // basis of W, then subtract half the self-products along the z's so all
  // <zbar_i, zbar_j> vanish.
  if (qp > 0) {
    std::vector<Vec<S>> fg = out.f;
    fg.insert(fg.end(), out.g.begin(), out.g.end());
    const auto w_basis = orthogonal_complement(space, fg, tol);
    if (w_basis.size() != 2 * qp)
      throw consistency_error("unexpected dimension of the isotropic block");
    Matrix<S> pairing(qp, w_basis.size());
    for (std::size_t i = 0; i < qp; ++i)
      for (std::size_t k = 0; k < w_basis.size(); ++k)
        pairing(i, k) = space.inner(out.isotropic[i], w_basis[k]);
    std::vector<Vec<S>> raw;
    for (std::size_t j = 0; j < qp; ++j) {
      auto sol = solve_linear(pairing, unit_vec<S>(qp, j), tol);
      if (!sol) throw consistency_error("failed to complete a Witt basis");
      Vec<S> zbar(n, S(0));
      for (std::size_t k = 0; k < w_basis.size(); ++k)
        axpy(zbar, (*sol)[k], w_basis[k]);
      raw.push_back(std::move(zbar));
    }
    for (std::size_t j = 0; j < qp; ++j) {
      Vec<S> zbar = raw[j];
      for (std::size_t i = 0; i < qp; ++i) {
        const S half(scalar_traits<S>::from_ratio(1, 2));
        axpy(zbar, -half * space.inner(raw[i], raw[j]), out.isotropic[i]);
      }
      out.partners.push_back(std::move(zbar));
    }
  }

  for (const auto& v : out.f) out.f_norms.push_back(space.inner(v, v));
  for (const auto& v : out.g) out.g_norms.push_back(space.inner(v, v));

  if (!scalar_traits<S>::is_exact) {
    out.normalized = true;
    for (std::size_t i = 0; i < out.f.size(); ++i) {
      double nn = std::sqrt(std::fabs(scalar_traits<S>::to_double(out.f_norms[i])));
      for (auto& x : out.f[i]) x /= S(nn);
      out.f_norms[i] = space.inner(out.f[i], out.f[i]);
    }
    for (std::size_t i = 0; i < out.g.size(); ++i) {
      double nn = std::sqrt(std::fabs(scalar_traits<S>::to_double(out.g_norms[i])));
      for (auto& x : out.g[i]) x /= S(nn);
      out.g_norms[i] = space.inner(out.g[i], out.g[i]);
    }
  }
  return out;
}

/// Relations the adapted basis has to satisfy; empty means all good.
template <class S>
std::vector<std::string> check_adapted_basis(const NilMetricAlgebra<S>& alg,
                                             const AdaptedBasis<S>& ab,
                                             double tol = kDefaultTol) {
  std::vector<std::string> bad;
  const auto& sp = alg.space;
  auto zero = [&](const S& v) { return scalar_traits<S>::is_zero(v, tol); };
  const std::size_t qp = ab.isotropic.size();
  for (std::size_t i = 0; i < qp; ++i)
    for (std::size_t j = 0; j < qp; ++j) {
      if (!zero(sp.inner(ab.isotropic[i], ab.isotropic[j])))
        bad.push_back("isotropic block not null");
      if (!zero(sp.inner(ab.partners[i], ab.partners[j])))
        bad.push_back("partner block not null");
      if (!zero(sp.inner(ab.isotropic[i], ab.partners[j]) -
                (i == j ? S(1) : S(0))))
        bad.push_back("pairing <z_i, zbar_j> != delta_ij");
    }
  auto check_orth = [&](const std::vector<Vec<S>>& vs, const char* name) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (i != j && !zero(sp.inner(vs[i], vs[j])))
          bad.push_back(std::string(name) + " basis not orthogonal");
        if (i == j && zero(sp.inner(vs[i], vs[i])))
          bad.push_back(std::string(name) + " basis vector is null");
      }
  };
  check_orth(ab.f, "F");
  check_orth(ab.g, "G");
  if (ab.normalized) {
    for (const auto& nrm : ab.f_norms)
      if (!near(scalar_traits<S>::abs(nrm), S(1), tol))
        bad.push_back("F norms not +/-1");
    for (const auto& nrm : ab.g_norms)
      if (!near(scalar_traits<S>::abs(nrm), S(1), tol))
        bad.push_back("G norms not +/-1");
  }
  // Cross-orthogonality of the isotropic block against F and G.
  std::vector<Vec<S>> fg = ab.f;
  fg.insert(fg.end(), ab.g.begin(), ab.g.end());
  for (const auto& w : fg)
    for (std::size_t i = 0; i < qp; ++i)
      if (!zero(sp.inner(w, ab.isotropic[i])) ||
          !zero(sp.inner(w, ab.partners[i])))
        bad.push_back("isotropic block not orthogonal to F + G");
  // Everything together must be a basis; F must complement the radical in the
  // center and G in its orthogonal.
  std::vector<Vec<S>> all = fg;
  all.insert(all.end(), ab.isotropic.begin(), ab.isotropic.end());
  all.insert(all.end(), ab.partners.begin(), ab.partners.end());
  if (span_rank(all, tol) != alg.dim()) bad.push_back("union is not a basis");
  std::vector<Vec<S>> zf = ab.isotropic;
  zf.insert(zf.end(), ab.f.begin(), ab.f.end());
  if (!same_span(zf, alg.center, tol))
    bad.push_back("isotropic + F does not span the center");
  std::vector<Vec<S>> zg = ab.isotropic;
  zg.insert(zg.end(), ab.g.begin(), ab.g.end());
  if (!same_span(zg, orthogonal_complement(alg.space, alg.center, tol), tol))
    bad.push_back("isotropic + G does not span the center's orthogonal");
  return bad;
}

/// Heisenberg: 1-dimensional center equal to the derived ideal, odd dimension.
template <class S>
bool is_heisenberg(const NilMetricAlgebra<S>& alg, double tol = kDefaultTol) {
  return alg.center_dim() == 1 && derived_ideal(alg, tol).dim() == 1 &&
         alg.dim() % 2 == 1 && alg.dim() >= 3;
}

/// Heisenberg-type: Euclidean metric with J_z J_w + J_w J_z = -2<z,w> P
/// (P the projection onto the center's orthogonal) for all central z, w —
/// the basis-free form of J_i^2 = -P, J_i J_j = -J_j J_i for an orthonormal
/// center basis.
template <class S>
bool is_heisenberg_type(const NilMetricAlgebra<S>& alg,
                        double tol = kDefaultTol) {
  if (!alg.space.is_euclidean()) return false;
  const std::size_t p = alg.center_dim();
  const Matrix<S> cmat = center_matrix(alg);
  const Matrix<S> cgram = cmat.transpose() * alg.space.gram() * cmat;
  Matrix<S> proj_center;
  try {
    proj_center = cmat * inverse(cgram, tol) * cmat.transpose() * alg.space.gram();
  } catch (const singular_error&) {
    return false;
  }
  const Matrix<S> proj_perp = Matrix<S>::identity(alg.dim()) - proj_center;

  // K_k = sum_i <c_k, c_i> J_i plays the role of J_{c_k}.
  std::vector<Matrix<S>> k(p, Matrix<S>(alg.dim(), alg.dim()));
  for (std::size_t kk = 0; kk < p; ++kk)
    for (std::size_t i = 0; i < p; ++i) k[kk] += cgram(kk, i) * alg.js[i];

  double scale = std::max(1.0, proj_perp.max_abs_d());
  for (const auto& m : k) scale = std::max(scale, m.max_abs_d() * m.max_abs_d());
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      const Matrix<S> lhs = k[a] * k[b] + k[b] * k[a];
      const Matrix<S> rhs = (S(-2) * cgram(a, b)) * proj_perp;
      if (!(lhs - rhs).is_zero(tol * scale)) return false;
    }
  return true;
}

}  // namespace nilcurv
