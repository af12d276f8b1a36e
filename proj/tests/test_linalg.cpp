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

#include <catch2/catch_amalgamated.hpp>

#include "locdisc/eigen.hpp"
#include "locdisc/matrix.hpp"
#include "locdisc/random.hpp"

using namespace locdisc;

namespace {

CMatrix reconstruct(const HermitianEigen& e) {
  const std::size_t n = e.eigenvalues.size();
  CMatrix lambda(n, n);
  for (std::size_t i = 0; i < n; ++i) lambda(i, i) = e.eigenvalues[i];
  return e.eigenvectors * lambda * e.eigenvectors.adjoint();
}

CMatrix reconstruct(const Svd& s, std::size_t rows, std::size_t cols) {
  CMatrix sigma(rows, cols);
  for (std::size_t i = 0; i < s.singular_values.size(); ++i)
    sigma(i, i) = s.singular_values[i];
  return s.u * sigma * s.v.adjoint();
}

CMatrix random_traceless(Rng& rng, std::size_t n) {
  CMatrix h = random_matrix(rng, n, n);
  const Complex shift = h.trace() / double(n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) -= shift;
  return h;
}

}  // namespace

TEST_CASE("hermitian_eig on already-diagonal matrix", "[linalg]") {
  CMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1.0;
  const HermitianEigen e = hermitian_eig(a);
  REQUIRE(e.eigenvalues.size() == 2);
  CHECK(e.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
  CHECK(e.eigenvalues[1] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(std::abs(e.eigenvectors(0, 0)) == Catch::Approx(1.0).margin(1e-12));
  CHECK(std::abs(e.eigenvectors(1, 1)) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("hermitian_eig on sigma_x", "[linalg]") {
  CMatrix a(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  const HermitianEigen e = hermitian_eig(a);
  CHECK(e.eigenvalues[0] == Catch::Approx(1.0).margin(1e-12));
  CHECK(e.eigenvalues[1] == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("hermitian_eig reconstructs a random 6x6", "[linalg]") {
  Rng rng(11);
  const CMatrix a = random_hermitian(rng, 6);
  const HermitianEigen e = hermitian_eig(a);
  CHECK((a - reconstruct(e)).frobenius_norm() <= 1e-10 * a.frobenius_norm());
}

TEST_CASE("hermitian_eig rejects bad input", "[linalg]") {
  CHECK_THROWS_AS(hermitian_eig(CMatrix(2, 3)), precondition_error);
  CMatrix a(2, 2);
  a(0, 1) = 1.0;
  a(1, 0) = 2.0;
  CHECK_THROWS_AS(hermitian_eig(a), precondition_error);
}

TEST_CASE("hermitian_eig residual and orthonormality over random batch",
          "[linalg]") {
  Rng rng(12);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const CMatrix a = random_hermitian(rng, n);
      const HermitianEigen e = hermitian_eig(a);
      const double scale = a.frobenius_norm();
      REQUIRE((a - reconstruct(e)).frobenius_norm() <= 1e-10 * scale);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const Complex ov = inner(e.eigenvectors.column(i), e.eigenvectors.column(j));
          const double expect = (i == j) ? 1.0 : 0.0;
          REQUIRE(std::abs(ov - Complex(expect, 0.0)) <= 1e-10);
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i)
        REQUIRE(e.eigenvalues[i] >= e.eigenvalues[i + 1] - 1e-12);
    }
  }
}

TEST_CASE("svd of identity", "[linalg]") {
  const Svd s = svd(CMatrix::identity(3));
  for (double sv : s.singular_values) CHECK(sv == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("svd of rank-1 outer product", "[linalg]") {
  Rng rng(13);
  const CVector u = random_state_vector(rng, 4);
  const CVector v = random_state_vector(rng, 4);
  const Svd s = svd(outer(u, v));
  CHECK(s.singular_values[0] == Catch::Approx(1.0).margin(1e-10));
  for (std::size_t k = 1; k < s.singular_values.size(); ++k)
    CHECK(std::abs(s.singular_values[k]) <= 1e-10);
}

TEST_CASE("svd reconstruction on random shapes", "[linalg]") {
  Rng rng(14);
  const std::pair<std::size_t, std::size_t> shapes[] = {
      {4, 4}, {2, 5}, {5, 3}, {1, 4}, {6, 1}};
  for (const auto& [r, c] : shapes) {
    for (int trial = 0; trial < 40; ++trial) {
      const CMatrix a = random_matrix(rng, r, c);
      const Svd s = svd(a);
      const double scale = a.frobenius_norm();
      REQUIRE((a - reconstruct(s, r, c)).frobenius_norm() <= 1e-10 * scale);
      REQUIRE(unitarity_defect(s.u) <= 1e-10 * std::sqrt(double(r)));
      REQUIRE(unitarity_defect(s.v) <= 1e-10 * std::sqrt(double(c)));
      for (std::size_t k = 0; k + 1 < s.singular_values.size(); ++k) {
        REQUIRE(s.singular_values[k] >= s.singular_values[k + 1] - 1e-14);
        REQUIRE(s.singular_values[k + 1] >= -1e-14);
      }
    }
  }
}

TEST_CASE("svd of rank-deficient matrix keeps unitary factors", "[linalg]") {
  Rng rng(15);
  const CVector u = random_state_vector(rng, 5);
  const CVector v = random_state_vector(rng, 3);
  const CMatrix a = outer(u, v);  // rank 1, 5x3
  const Svd s = svd(a);
  CHECK(unitarity_defect(s.u) <= 1e-10 * std::sqrt(5.0));
  CHECK(unitarity_defect(s.v) <= 1e-10 * std::sqrt(3.0));
  CHECK((a - reconstruct(s, 5, 3)).frobenius_norm() <= 1e-10);
}

TEST_CASE("zero_diagonal_unitary on diag(1,-1)", "[linalg]") {
  CMatrix h(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const CMatrix u = zero_diagonal_unitary(h);
  const CMatrix r = u * h * u.adjoint();
  CHECK(max_abs_diagonal(r) <= 1e-12);
  CHECK(std::abs(r(0, 1)) == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("zero_diagonal_unitary on zero matrix", "[linalg]") {
  const CMatrix u = zero_diagonal_unitary(CMatrix(3, 3));
  CHECK((u - CMatrix::identity(3)).frobenius_norm() == 0.0);
}

TEST_CASE("zero_diagonal_unitary on random traceless 3x3", "[linalg]") {
  Rng rng(16);
  const CMatrix h = random_traceless(rng, 3);
  const CMatrix u = zero_diagonal_unitary(h);
  CHECK(max_abs_diagonal(u * h * u.adjoint()) <= 1e-9 * h.frobenius_norm());
}

TEST_CASE("zero_diagonal_unitary rejects nonzero trace", "[linalg]") {
  CMatrix h = CMatrix::identity(2);
  CHECK_THROWS_AS(zero_diagonal_unitary(h), precondition_error);
}

TEST_CASE("zero_diagonal_unitary batch over dimensions", "[linalg]") {
  Rng rng(17);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const CMatrix h = random_traceless(rng, n);
      const CMatrix u = zero_diagonal_unitary(h);
      REQUIRE(max_abs_diagonal(u * h * u.adjoint()) <= 1e-9 * h.frobenius_norm());
      REQUIRE(unitarity_defect(u) <= 1e-10 * std::sqrt(double(n)));
    }
  }
}

TEST_CASE("zero_diagonal_unitary is deterministic", "[linalg]") {
  Rng rng(18);
  const CMatrix h = random_traceless(rng, 4);
  const CMatrix u1 = zero_diagonal_unitary(h);
  const CMatrix u2 = zero_diagonal_unitary(h);
  CHECK((u1 - u2).frobenius_norm() == 0.0);
}

TEST_CASE("diagonalize_normal reduces to hermitian_eig on Hermitian input",
          "[linalg]") {
  Rng rng(19);
  const CMatrix a = random_hermitian(rng, 4);
  const NormalDiagonalization nd = diagonalize_normal(a);
  const HermitianEigen e = hermitian_eig(a);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(nd.eigenvalues[i].real() == Catch::Approx(e.eigenvalues[i]).margin(1e-9));
    CHECK(std::abs(nd.eigenvalues[i].imag()) <= 1e-9);
  }
}

TEST_CASE("diagonalize_normal on sigma_x", "[linalg]") {
  CMatrix sx(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const NormalDiagonalization nd = diagonalize_normal(sx);
  CHECK(nd.eigenvalues[0].real() == Catch::Approx(1.0).margin(1e-10));
  CHECK(nd.eigenvalues[1].real() == Catch::Approx(-1.0).margin(1e-10));
  CHECK(offdiag_frobenius(nd.u * sx * nd.u.adjoint()) <= 1e-10);
}

TEST_CASE("diagonalize_normal recovers constructed spectra", "[linalg]") {
  Rng rng(20);
  for (std::size_t n : {2ul, 3ul, 4ul, 5ul}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Complex> diag(n);
      CMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        diag[i] = rng.cgauss();
        d(i, i) = diag[i];
      }
      const CMatrix w = random_unitary(rng, n);
      const CMatrix normal = w * d * w.adjoint();
      const NormalDiagonalization nd = diagonalize_normal(normal);
      REQUIRE(offdiag_frobenius(nd.u * normal * nd.u.adjoint()) <=
              1e-9 * normal.frobenius_norm());
      // Multiset match against the planted diagonal.
      std::vector<bool> used(n, false);
      for (const Complex& ev : nd.eigenvalues) {
        double best = 1e100;
        std::size_t pick = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (used[j]) continue;
          const double dist = std::abs(ev - diag[j]);
          if (dist < best) {
            best = dist;
            pick = j;
          }
        }
        used[pick] = true;
        REQUIRE(best <= 1e-8);
      }
    }
  }
}

TEST_CASE("diagonalize_normal rejects non-normal input", "[linalg]") {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = 1.0;  // Jordan-type block: not normal
  m(1, 1) = 1.0;
  CHECK_THROWS_AS(diagonalize_normal(m), precondition_error);
}

TEST_CASE("diagonalize_normal on a random unitary", "[linalg]") {
  Rng rng(21);
  const CMatrix w = random_unitary(rng, 4);
  const NormalDiagonalization nd = diagonalize_normal(w);
  for (const Complex& ev : nd.eigenvalues)
    CHECK(std::abs(ev) == Catch::Approx(1.0).margin(1e-9));
  CHECK(offdiag_frobenius(nd.u * w * nd.u.adjoint()) <= 1e-9 * w.frobenius_norm());
}
