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

#include <optional>
#include <vector>

#include "locdisc/states.hpp"

namespace locdisc {

// Discrimination answers. Inconclusive only appears in conclusive protocols.
enum class Label { State1, State2, Inconclusive };

// Eigenvalues of the Helstrom operator within this band of zero are treated
// as zero; such outcomes never fire on a generic pure pair and are assigned
// to the State1 answer to complete the measurement.
inline constexpr double kEigenSignTol = 1e-11;

struct PovmElement {
  CMatrix op;
  Label answer = Label::State1;
};

// The orthogonal pair spanning the two-hypothesis plane, plus the expansion
// of each hypothesis state in it.
struct DiscriminationBasis {
  PureState plus, minus;           // positive / negative eigenvector direction
  Complex state1_on_plus, state1_on_minus;
  Complex state2_on_plus, state2_on_minus;
};

struct HelstromResult {
  std::vector<CVector> positive_eigenstates;
  std::vector<CVector> negative_eigenstates;
  std::vector<CVector> zero_eigenstates;
  double error_probability = 0.0;
  std::optional<DiscriminationBasis> basis;  // present for pure-pure input
};

namespace detail {

// Orthonormal completion of up to two seed vectors in dimension n; returns
// the remaining columns.
inline std::vector<CVector> completion_vectors(const std::vector<CVector>& seeds,
                                               std::size_t n) {
  CMatrix basis(n, n);
  for (std::size_t k = 0; k < seeds.size(); ++k) basis.set_column(k, seeds[k]);
  complete_orthonormal(basis, seeds.size());
  std::vector<CVector> rest;
  for (std::size_t k = seeds.size(); k < n; ++k) rest.push_back(basis.column(k));
  return rest;
}

// Phase-fix: rotate v so its first entry above threshold is real nonnegative.
inline CVector canonical_phase(CVector v) {
  for (const Complex& z : v) {
    const double az = std::abs(z);
    if (az > 1e-14) return scaled(std::move(v), std::conj(z) / az);
  }
  return v;
}

}  // namespace detail

// Pure two-state minimum-error discrimination, solved in the span of the two
// states: Gram-Schmidt of state 2 against state 1 and a closed-form 2x2
// eigenproblem. Deterministic phases: <state1|plus> is made real nonnegative.
inline HelstromResult helstrom_pure(const PureState& psi1, const PureState& psi2,
                                    double p1, double p2) {
  const std::size_t n = psi1.amplitudes.size();
  const Complex ov = overlap(psi1, psi2);
  CVector resid = sub(psi2.amplitudes, scaled(psi1.amplitudes, ov));
  const double t = norm2(resid);

  HelstromResult out;
  CVector vplus, vminus;
  double lam_plus = 0.0, lam_minus = 0.0;
  if (t <= 1e-12) {
    // States coincide up to phase. The state direction carries the whole
    // eigenvalue p1 - p2; any orthogonal direction completes the basis.
    const double lam = p1 - p2;
    CVector orth = detail::completion_vectors({psi1.amplitudes}, n).front();
    if (lam >= 0.0) {
      vplus = psi1.amplitudes;
      vminus = std::move(orth);
      lam_plus = lam;
      lam_minus = 0.0;
    } else {
      vplus = std::move(orth);
      vminus = psi1.amplitudes;
      lam_plus = 0.0;
      lam_minus = lam;
    }
  } else {
    for (Complex& z : resid) z /= t;
    // Helstrom operator compressed onto (psi1, resid):
    //   [[p1 - p2 s^2,  -p2 ov t], [-p2 conj(ov) t,  -p2 t^2]],  s = |ov|.
    const double s2 = std::norm(ov);
    const double a11 = p1 - p2 * s2;
    const Complex a12 = -p2 * ov * t;
    const double a22 = -p2 * t * t;
    const double mean = 0.5 * (a11 + a22);
    const double half_gap = std::hypot(0.5 * (a11 - a22), std::abs(a12));
    lam_plus = mean + half_gap;
    lam_minus = mean - half_gap;

    // Eigenvector of the 2x2 block for each eigenvalue; use the better
    // conditioned of the two algebraic forms.
    const auto span_vector = [&](double lam) {
      Complex c1, c2;
      if (std::abs(lam - a22) >= std::abs(lam - a11)) {
        c1 = a12;
        c2 = lam - a11;
        if (std::abs(c1) + std::abs(c2) <= 1e-300) c1 = 1.0;
      } else {
        c1 = lam - a22;
        c2 = std::conj(a12);
        if (std::abs(c1) + std::abs(c2) <= 1e-300) c2 = 1.0;
      }
      CVector v = add(scaled(psi1.amplitudes, c1), scaled(resid, c2));
      return detail::canonical_phase(normalized(std::move(v)));
    };
    vplus = span_vector(lam_plus);
    vminus = span_vector(lam_minus);
  }

  vplus = detail::canonical_phase(std::move(vplus));
  vminus = detail::canonical_phase(std::move(vminus));

  DiscriminationBasis basis;
  basis.plus = PureState(psi1.structure, vplus);
  basis.minus = PureState(psi1.structure, vminus);
  basis.state1_on_plus = inner(vplus, psi1.amplitudes);
  basis.state1_on_minus = inner(vminus, psi1.amplitudes);
  basis.state2_on_plus = inner(vplus, psi2.amplitudes);
  basis.state2_on_minus = inner(vminus, psi2.amplitudes);

  // Error probability: answer State1 on the positive eigenstate, State2 on
  // the negative one; zero band answers State1.
  double pe = 0.0;
  if (lam_plus > kEigenSignTol) {
    out.positive_eigenstates.push_back(vplus);
    pe += p2 * std::norm(basis.state2_on_plus);
  } else if (lam_plus < -kEigenSignTol) {
    out.negative_eigenstates.push_back(vplus);
    pe += p1 * std::norm(basis.state1_on_plus);
  } else {
    out.zero_eigenstates.push_back(vplus);
    pe += p2 * std::norm(basis.state2_on_plus);
  }
  if (lam_minus < -kEigenSignTol) {
    out.negative_eigenstates.push_back(vminus);
    pe += p1 * std::norm(basis.state1_on_minus);
  } else if (lam_minus > kEigenSignTol) {
    out.positive_eigenstates.push_back(vminus);
    pe += p2 * std::norm(basis.state2_on_minus);
  } else {
    out.zero_eigenstates.push_back(vminus);
    pe += p2 * std::norm(basis.state2_on_minus);
  }
  // The orthocomplement of the span never fires on either state.
  for (CVector& v : detail::completion_vectors({vplus, vminus}, n))
    out.zero_eigenstates.push_back(std::move(v));

  out.error_probability = pe;
  out.basis = std::move(basis);
  return out;
}

inline HelstromResult helstrom(const Ensemble& e) {
  if (e.pure()) return helstrom_pure(e.pure1(), e.pure2(), e.p1, e.p2);

  const CMatrix rho1 = e.density1();
  const CMatrix rho2 = e.density2();
  const CMatrix delta = e.p1 * rho1 - e.p2 * rho2;
  const HermitianEigen eig = hermitian_eig(delta);

  HelstromResult out;
  double pe = 0.0;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    CVector v = eig.eigenvectors.column(k);
    const double expect1 = inner(v, matvec(rho1, v)).real();
    const double expect2 = inner(v, matvec(rho2, v)).real();
    if (eig.eigenvalues[k] > kEigenSignTol) {
      pe += e.p2 * expect2;
      out.positive_eigenstates.push_back(std::move(v));
    } else if (eig.eigenvalues[k] < -kEigenSignTol) {
      pe += e.p1 * expect1;
      out.negative_eigenstates.push_back(std::move(v));
    } else {
      pe += e.p2 * expect2;
      out.zero_eigenstates.push_back(std::move(v));
    }
  }
  out.error_probability = pe;
  return out;
}

// The optimal measurement as an explicit POVM (zero-band projectors answer
// State1).
inline std::vector<PovmElement> helstrom_povm(const HelstromResult& r) {
  std::vector<PovmElement> povm;
  for (const CVector& v : r.positive_eigenstates)
    povm.push_back({outer(v, v), Label::State1});
  for (const CVector& v : r.negative_eigenstates)
    povm.push_back({outer(v, v), Label::State2});
  for (const CVector& v : r.zero_eigenstates)
    povm.push_back({outer(v, v), Label::State1});
  return povm;
}

// Average error probability of an arbitrary two-answer POVM on an ensemble.
inline double error_of_measurement(const Ensemble& e,
                                   const std::vector<PovmElement>& povm) {
  if (povm.empty()) throw precondition_error("error_of_measurement: empty POVM");
  const std::size_t n = e.structure().total_dimension();
  CMatrix sum(n, n);
  for (const PovmElement& el : povm) {
    if (el.answer == Label::Inconclusive)
      throw precondition_error(
          "error_of_measurement: inconclusive labels not allowed here");
    if (el.op.rows() != n || el.op.cols() != n)
      throw precondition_error("error_of_measurement: element shape mismatch");
    if (!is_hermitian(el.op, 1e-9))
      throw precondition_error("error_of_measurement: element not Hermitian");
    const HermitianEigen eg = hermitian_eig(0.5 * (el.op + el.op.adjoint()));
    if (!eg.eigenvalues.empty() && eg.eigenvalues.back() < -1e-9)
      throw precondition_error("error_of_measurement: element not PSD");
    sum = sum + el.op;
  }
  if ((sum - CMatrix::identity(n)).frobenius_norm() > 1e-9 * std::sqrt(double(n)))
    throw precondition_error("error_of_measurement: POVM does not sum to identity");

  const CMatrix rho1 = e.density1();
  const CMatrix rho2 = e.density2();
  double pe = 0.0;
  for (const PovmElement& el : povm) {
    if (el.answer == Label::State1)
      pe += e.p2 * (rho2 * el.op).trace().real();
    else
      pe += e.p1 * (rho1 * el.op).trace().real();
  }
  return pe;
}

}  // namespace locdisc
