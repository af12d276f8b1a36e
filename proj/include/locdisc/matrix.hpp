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

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "locdisc/errors.hpp"

namespace locdisc {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense complex matrix, row-major. Sized for desk-scale problems
// (dimensions well below a few hundred); no clever storage.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Complex(0.0, 0.0)) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return a_; }

  CMatrix transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  CMatrix conj() const {
    CMatrix c(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) c.a_[k] = std::conj(a_[k]);
    return c;
  }

  CMatrix adjoint() const {
    CMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
  }

  Complex trace() const {
    Complex s = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : a_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool finite() const {
    for (const Complex& z : a_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  CVector column(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  CVector row(std::size_t i) const {
    CVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  void set_column(std::size_t j, const CVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw precondition_error("matrix shape mismatch");
    CMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix shape mismatch");
    CMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
  }

  friend CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw precondition_error("matrix shape mismatch");
    CMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
  }

  friend CMatrix operator*(Complex z, const CMatrix& a) {
    CMatrix c = a;
    for (Complex& e : c.a_) e *= z;
    return c;
  }

  friend CMatrix operator*(double x, const CMatrix& a) {
    return Complex(x, 0.0) * a;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> a_;
};

// -- vector helpers ----------------------------------------------------------

// <a|b>, conjugate-linear in the first argument.
inline Complex inner(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw precondition_error("vector length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm2(const CVector& a) {
  double s = 0.0;
  for (const Complex& z : a) s += std::norm(z);
  return std::sqrt(s);
}

inline CVector normalized(CVector a) {
  const double n = norm2(a);
  if (n <= 0.0) throw precondition_error("cannot normalize zero vector");
  for (Complex& z : a) z /= n;
  return a;
}

inline CVector scaled(CVector a, Complex z) {
  for (Complex& e : a) e *= z;
  return a;
}

inline CVector add(CVector a, const CVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline CVector sub(CVector a, const CVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline CVector matvec(const CMatrix& m, const CVector& v) {
  if (m.cols() != v.size()) throw precondition_error("matvec shape mismatch");
  CVector r(m.rows(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

// |a><b|
inline CMatrix outer(const CVector& a, const CVector& b) {
  CMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

// -- predicates and measures -------------------------------------------------

inline double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).frobenius_norm();
}

inline double unitarity_defect(const CMatrix& m) {
  if (!m.square()) return 1.0;
  return (m.adjoint() * m - CMatrix::identity(m.rows())).frobenius_norm();
}

inline bool is_hermitian(const CMatrix& m, double tol) {
  if (!m.square()) return false;
  const double scale = std::max(m.frobenius_norm(), 1e-14);
  return hermiticity_defect(m) <= tol * scale;
}

inline bool is_unitary(const CMatrix& m, double tol) {
  return m.square() && unitarity_defect(m) <= tol * std::sqrt(double(m.rows()));
}

inline double max_abs_diagonal(const CMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    v = std::max(v, std::abs(m(i, i)));
  return v;
}

inline double offdiag_frobenius(const CMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

}  // namespace locdisc
