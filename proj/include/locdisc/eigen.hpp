// Copyright 2026 The locdisc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "locdisc/matrix.hpp"

// Dense complex eigen/SVD routines for small dimension. Everything here is
// built from one family of 2x2 unitary rotations
//
//   R = [[c, -conj(s)], [s, c]],   c real >= 0,  c^2 + |s|^2 = 1,
//
// embedded at a coordinate pair (p, q) and applied as M -> R^† M R, with the
// basis accumulated as V -> V R (columns of V are the new basis vectors).

namespace locdisc {

namespace detail {

// Applies the (p,q) rotation to M in place: M <- R^† M R.
inline void rotate_both_sides(CMatrix& m, std::size_t p, std::size_t q,
                              double c, Complex s) {
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex mp = m(r, p), mq = m(r, q);
    m(r, p) = c * mp + s * mq;
    m(r, q) = -std::conj(s) * mp + c * mq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Complex mp = m(p, r), mq = m(q, r);
    m(p, r) = c * mp + std::conj(s) * mq;
    m(q, r) = -s * mp + c * mq;
  }
}

// V <- V R.
inline void rotate_columns(CMatrix& v, std::size_t p, std::size_t q, double c,
                           Complex s) {
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Complex vp = v(r, p), vq = v(r, q);
    v(r, p) = c * vp + s * vq;
    v(r, q) = -std::conj(s) * vp + c * vq;
  }
}

// Rotation annihilating the off-diagonal entry of the Hermitian 2x2 block
// [[a, b], [conj(b), d]] with a, d real.
inline void hermitian_rotation(double a, double d, Complex b, double& c,
                               Complex& s) {
  const double ab = std::abs(b);
  if (ab == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  const Complex phase = b / ab;
  const double mu = (a - d) / (2.0 * ab);
  const double sgn = (mu >= 0.0) ? 1.0 : -1.0;
  const double t = sgn / (std::abs(mu) + std::hypot(1.0, mu));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = t * c * std::conj(phase);
}

inline double sorted_descending_permutation(std::vector<double>& vals,
                                            CMatrix& vecs) {
  std::vector<std::size_t> idx(vals.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
  std::vector<double> sv(vals.size());
  CMatrix sm(vecs.rows(), vecs.cols());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    sv[k] = vals[idx[k]];
    sm.set_column(k, vecs.column(idx[k]));
  }
  vals = std::move(sv);
  vecs = std::move(sm);
  return 0.0;
}

}  // namespace detail

// -- Hermitian eigendecomposition --------------------------------------------

struct HermitianEigen {
  std::vector<double> eigenvalues;  // descending
  CMatrix eigenvectors;             // columns, orthonormal: A = V diag V^†
};

// Cyclic complex Jacobi. Off-diagonal Frobenius mass is driven below
// 1e-12 * ||A||_F; at most 100 sweeps (quadratic convergence makes the cap
// academic at these sizes).
inline HermitianEigen hermitian_eig(const CMatrix& a) {
  if (!a.square()) throw precondition_error("hermitian_eig: matrix not square");
  if (!a.finite()) throw precondition_error("hermitian_eig: non-finite entries");
  const std::size_t n = a.rows();
  const double scale = a.frobenius_norm();
  if (hermiticity_defect(a) > 1e-10 * std::max(scale, 1e-14))
    throw precondition_error("hermitian_eig: matrix not Hermitian");

  HermitianEigen out;
  out.eigenvalues.assign(n, 0.0);
  out.eigenvectors = CMatrix::identity(n);
  if (scale <= 1e-300) return out;

  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * ((a)(i, j) + std::conj((a)(j, i)));

  const double tol = 1e-12 * scale;
  const double skip = tol / (4.0 * double(n) * double(n));
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_frobenius(h) <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(h(p, q)) <= skip) continue;
        double c;
        Complex s;
        detail::hermitian_rotation(h(p, p).real(), h(q, q).real(), h(p, q), c, s);
        detail::rotate_both_sides(h, p, q, c, s);
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(q, q) = h(q, q).real();
        detail::rotate_columns(out.eigenvectors, p, q, c, s);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = h(i, i).real();
  detail::sorted_descending_permutation(out.eigenvalues, out.eigenvectors);
  return out;
}

// -- singular value decomposition --------------------------------------------

struct Svd {
  CMatrix u;                           // rows x rows, unitary
  std::vector<double> singular_values; // min(rows, cols), descending
  CMatrix v;                           // cols x cols, unitary:  A = U S V^†
};

namespace detail {

// Extends the first `have` orthonormal columns of `basis` to a full basis.
inline void complete_orthonormal(CMatrix& basis, std::size_t have) {
  const std::size_t n = basis.rows();
  std::size_t next = have;
  for (std::size_t cand = 0; cand < n && next < n; ++cand) {
    CVector v(n, Complex(0.0, 0.0));
    v[cand] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < next; ++j) {
        const CVector bj = basis.column(j);
        const Complex ov = inner(bj, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= ov * bj[i];
      }
    const double nv = norm2(v);
    if (nv > 1e-6) {
      for (Complex& z : v) z /= nv;
      basis.set_column(next++, v);
    }
  }
}

inline Svd svd_tall(const CMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  CMatrix w = a;
  CMatrix v = CMatrix::identity(n);
  const double eps = 1e-15;
  for (int sweep = 0; sweep < 100; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0;
        Complex apq = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
          app += std::norm(w(r, p));
          aqq += std::norm(w(r, q));
          apq += std::conj(w(r, p)) * w(r, q);
        }
        if (std::abs(apq) <= eps * std::sqrt(app * aqq) || app == 0.0 ||
            aqq == 0.0)
          continue;
        ++rotations;
        double c;
        Complex s;
        hermitian_rotation(app, aqq, apq, c, s);
        for (std::size_t r = 0; r < m; ++r) {
          const Complex wp = w(r, p), wq = w(r, q);
          w(r, p) = c * wp + s * wq;
          w(r, q) = -std::conj(s) * wp + c * wq;
        }
        rotate_columns(v, p, q, c, s);
      }
    }
    if (rotations == 0) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double nj = 0.0;
    for (std::size_t r = 0; r < m; ++r) nj += std::norm(w(r, j));
    sigma[j] = std::sqrt(nj);
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  Svd out;
  out.u = CMatrix(m, m);
  out.v = CMatrix(n, n);
  out.singular_values.assign(n, 0.0);
  const double smax = sigma.empty() ? 0.0 : sigma[idx[0]];
  std::size_t filled = 0;
  for (std::size_t k = 0; k < n; ++k) {
    out.singular_values[k] = sigma[idx[k]];
    out.v.set_column(k, v.column(idx[k]));
    if (sigma[idx[k]] > std::max(1e-13 * smax, 1e-300)) {
      CVector col = w.column(idx[k]);
      for (Complex& z : col) z /= sigma[idx[k]];
      out.u.set_column(filled++, col);
    }
  }
  complete_orthonormal(out.u, filled);
  return out;
}

}  // namespace detail

inline Svd svd(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0)
    throw precondition_error("svd: empty matrix");
  if (!a.finite()) throw precondition_error("svd: non-finite entries");
  if (a.rows() >= a.cols()) return detail::svd_tall(a);
  Svd t = detail::svd_tall(a.adjoint());
  Svd out;
  out.u = std::move(t.v);
  out.v = std::move(t.u);
  out.singular_values = std::move(t.singular_values);
  return out;
}

// -- zero-diagonal unitary ----------------------------------------------------
//
// For traceless H (not necessarily Hermitian or normal) returns a unitary U
// with diag(U H U^†) ~ 0. The numerical range of H is convex and contains the
// diagonal mean, so for any coordinate pair there is a unit vector v in their
// span whose Rayleigh quotient equals the mean of the two diagonal entries:
// with B the 2x2 compression, m its diagonal mean and B0 = B - mI, the ansatz
// v = (cos t, e^{i psi} sin t) gives
//
//   v^† B0 v = beta x + sqrt(1 - x^2)/2 * (e^{i psi} B01 + e^{-i psi} B10),
//
// where beta = (B00 - B11)/2 and x = cos 2t. Choosing psi to turn the bracket
// parallel to beta reduces this to a scalar quadratic in x with an explicit
// root. Rotating onto [v, v_perp] therefore replaces both diagonal entries by
// their mean exactly; cyclic sweeps over all pairs contract the diagonal
// spread geometrically toward the common mean 0 (pairwise averaging over a
// connected pair graph), independent of the off-diagonal part.
inline CMatrix zero_diagonal_unitary(const CMatrix& h_in) {
  if (!h_in.square())
    throw precondition_error("zero_diagonal_unitary: matrix not square");
  if (!h_in.finite())
    throw precondition_error("zero_diagonal_unitary: non-finite entries");
  const std::size_t n = h_in.rows();
  const double scale = h_in.frobenius_norm();
  if (scale <= 1e-14) return CMatrix::identity(n);
  const Complex tr = h_in.trace();
  if (std::abs(tr) > 1e-10 * scale)
    throw precondition_error("zero_diagonal_unitary: trace significantly nonzero");

  // Remove the admitted trace slack so the diagonal mean is exactly zero.
  CMatrix h = h_in;
  const Complex mean_shift = tr / double(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) -= mean_shift;

  CMatrix v = CMatrix::identity(n);
  double prev = std::numeric_limits<double>::infinity();
  int stagnant = 0;
  for (int sweep = 0; sweep < 2000; ++sweep) {
    const double md = max_abs_diagonal(h);
    if (md <= 5e-15 * scale) break;
    if (md >= 0.999 * prev) {
      if (++stagnant >= 3 && md <= 1e-11 * scale) break;
    } else {
      stagnant = 0;
    }
    prev = md;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex app = h(p, p), aqq = h(q, q);
        const Complex beta = 0.5 * (app - aqq);
        const double ab = std::abs(beta);
        if (ab <= 1e-18 + 1e-16 * scale) continue;
        const Complex bhat = beta / ab;
        const Complex po = h(p, q) / bhat;
        const Complex qo = h(q, p) / bhat;
        const double num = -(po.imag() + qo.imag());
        const double den = po.real() - qo.real();
        const double psi = (num == 0.0 && den == 0.0) ? 0.0 : std::atan2(num, den);
        const Complex eip(std::cos(psi), std::sin(psi));
        const double hh = (eip * po).real() + (std::conj(eip) * qo).real();
        // x = cos 2t = -(h/2)/hypot(|beta|, h/2); form 1 +- x without
        // cancellation (x can sit next to -1 when the pair couples strongly).
        const double dd = std::hypot(ab, 0.5 * hh);
        double one_plus_x, one_minus_x;
        if (hh >= 0.0) {
          one_plus_x = (ab * ab) / (dd * (dd + 0.5 * hh));
          one_minus_x = (dd + 0.5 * hh) / dd;
        } else {
          one_minus_x = (ab * ab) / (dd * (dd - 0.5 * hh));
          one_plus_x = (dd - 0.5 * hh) / dd;
        }
        const double c = std::sqrt(0.5 * one_plus_x);
        const Complex s = eip * std::sqrt(0.5 * one_minus_x);
        detail::rotate_both_sides(h, p, q, c, s);
        detail::rotate_columns(v, p, q, c, s);
      }
    }
  }
  const CMatrix u = v.adjoint();
  if (max_abs_diagonal(u * h_in * u.adjoint()) > 1e-9 * scale)
    throw inconsistency_error("zero_diagonal_unitary: leveling did not converge");
  return u;
}

// -- simultaneous diagonalization of a commuting Hermitian pair ---------------

// Joint Jacobi sweep (Cardoso-Souloumiac angles): each (p,q) rotation maximizes
// the summed squared diagonal gain of both matrices. For a commuting pair this
// converges to a common eigenbasis; shared-eigenspace ties are resolved by the
// second matrix automatically.
inline CMatrix simdiag_hermitian_pair(const CMatrix& a_in, const CMatrix& b_in) {
  if (!a_in.square() || !b_in.square() || a_in.rows() != b_in.rows())
    throw precondition_error("simdiag: shape mismatch");
  const std::size_t n = a_in.rows();
  CMatrix a = a_in, b = b_in;
  CMatrix v = CMatrix::identity(n);
  const double scale2 =
      a.frobenius_norm() * a.frobenius_norm() + b.frobenius_norm() * b.frobenius_norm();
  if (scale2 <= 1e-300) return v;

  for (int sweep = 0; sweep < 200; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // 3-vectors h(M) = [Mpp - Mqq, 2 Re Mpq, 2 Im Mpq]; the optimal
        // rotation comes from the top eigenvector of sum h h^T.
        double g[2][3];
        const CMatrix* ms[2] = {&a, &b};
        for (int k = 0; k < 2; ++k) {
          const CMatrix& m = *ms[k];
          g[k][0] = (m(p, p) - m(q, q)).real();
          g[k][1] = 2.0 * m(p, q).real();
          g[k][2] = 2.0 * m(p, q).imag();
        }
        CMatrix q3(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            q3(i, j) = g[0][i] * g[0][j] + g[1][i] * g[1][j];
        if (q3.frobenius_norm() <= 1e-28 * scale2) continue;
        const HermitianEigen eq = hermitian_eig(q3);
        double x = eq.eigenvectors(0, 0).real();
        double y = eq.eigenvectors(1, 0).real();
        double z = eq.eigenvectors(2, 0).real();
        if (x < 0.0) {
          x = -x;
          y = -y;
          z = -z;
        }
        const double c = std::sqrt(0.5 * (x + 1.0));
        const Complex s = Complex(y, -z) / (2.0 * c);
        if (std::abs(s) <= 1e-15) continue;
        ++rotations;
        detail::rotate_both_sides(a, p, q, c, s);
        detail::rotate_both_sides(b, p, q, c, s);
        detail::rotate_columns(v, p, q, c, s);
      }
    }
    if (rotations == 0) break;
  }
  return v;
}

// -- unitary diagonalization of a normal matrix -------------------------------

struct NormalDiagonalization {
  CMatrix u;                        // U N U^† diagonal
  std::vector<Complex> eigenvalues; // sorted by (Re desc, Im desc)
};

// A normal N is split into the commuting Hermitian pair (N + N^†)/2 and
// (N - N^†)/(2i), which are diagonalized jointly. Avoids any general
// non-Hermitian eigensolver.
inline NormalDiagonalization diagonalize_normal(const CMatrix& n_in) {
  if (!n_in.square())
    throw precondition_error("diagonalize_normal: matrix not square");
  const std::size_t n = n_in.rows();
  const double scale = n_in.frobenius_norm();
  NormalDiagonalization out;
  out.u = CMatrix::identity(n);
  out.eigenvalues.assign(n, Complex(0.0, 0.0));
  if (scale <= 1e-14) return out;
  const double defect =
      (n_in * n_in.adjoint() - n_in.adjoint() * n_in).frobenius_norm();
  if (defect > 1e-9 * scale * scale)
    throw precondition_error("diagonalize_normal: matrix not normal");

  const CMatrix re = 0.5 * (n_in + n_in.adjoint());
  const CMatrix im = Complex(0.0, -0.5) * (n_in - n_in.adjoint());
  CMatrix v = simdiag_hermitian_pair(re, im);
  CMatrix d = v.adjoint() * n_in * v;

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const Complex di = d(i, i), dj = d(j, j);
    if (di.real() != dj.real()) return di.real() > dj.real();
    return di.imag() > dj.imag();
  });
  CMatrix vs(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    vs.set_column(k, v.column(idx[k]));
    out.eigenvalues[k] = d(idx[k], idx[k]);
  }
  out.u = vs.adjoint();
  if (offdiag_frobenius(out.u * n_in * out.u.adjoint()) > 1e-9 * scale)
    throw inconsistency_error("diagonalize_normal: joint sweep did not converge");
  return out;
}

}  // namespace locdisc
