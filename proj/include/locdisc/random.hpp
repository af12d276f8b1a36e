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

#include <cstdint>
#include <random>

#include "locdisc/matrix.hpp"

namespace locdisc {

// Deterministic generator: mt19937_64 with a hand-rolled 53-bit uniform and
// Box-Muller normals, so a seed pins the whole stream independently of the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return double(gen_() >> 11) * 0x1.0p-53;
  }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  Complex cgauss() {
    const double re = gauss();
    const double im = gauss();
    return Complex(re, im);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Haar-distributed pure state amplitudes: normalized complex-normal vector.
inline CVector random_state_vector(Rng& rng, std::size_t dim) {
  CVector v(dim);
  for (Complex& z : v) z = rng.cgauss();
  return normalized(std::move(v));
}

// Haar unitary via Gram-Schmidt of a complex Gaussian matrix with the
// R-diagonal phase fix.
inline CMatrix random_unitary(Rng& rng, std::size_t n) {
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.cgauss();
  CMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    CVector col = g.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        const CVector qk = q.column(k);
        const Complex ov = inner(qk, col);
        for (std::size_t i = 0; i < n; ++i) col[i] -= ov * qk[i];
      }
    const Complex rdiag = inner(g.column(j), col);
    col = normalized(std::move(col));
    const double ar = std::abs(rdiag);
    if (ar > 0.0) col = scaled(std::move(col), rdiag / ar);
    q.set_column(j, col);
  }
  return q;
}

// Random Hermitian with entries of order one.
inline CMatrix random_hermitian(Rng& rng, std::size_t n) {
  CMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = rng.gauss();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * rng.cgauss();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

inline CMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
  return m;
}

}  // namespace locdisc
