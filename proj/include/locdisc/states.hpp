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
#include <variant>
#include <vector>

#include "locdisc/eigen.hpp"
#include "locdisc/matrix.hpp"

namespace locdisc {

// Tensor-factor structure: one dimension (>= 2) per party. Joint indices are
// lexicographic with party 0 slowest.
struct PartyStructure {
  std::vector<std::size_t> dims;

  PartyStructure() = default;
  explicit PartyStructure(std::vector<std::size_t> d) : dims(std::move(d)) {
    if (dims.empty()) throw invariant_error("PartyStructure: no parties");
    for (std::size_t dim : dims)
      if (dim < 2) throw invariant_error("PartyStructure: party dimension < 2");
  }

  std::size_t parties() const { return dims.size(); }

  std::size_t total_dimension() const {
    std::size_t t = 1;
    for (std::size_t d : dims) t *= d;
    return t;
  }

  bool operator==(const PartyStructure& o) const { return dims == o.dims; }

  // Structure of the parties after dropping the first one.
  PartyStructure rest() const {
    if (dims.size() < 2)
      throw precondition_error("PartyStructure: no remaining parties");
    return PartyStructure(std::vector<std::size_t>(dims.begin() + 1, dims.end()));
  }
};

struct PureState {
  PartyStructure structure;
  CVector amplitudes;

  PureState() = default;
  PureState(PartyStructure s, CVector a)
      : structure(std::move(s)), amplitudes(std::move(a)) {
    if (amplitudes.size() != structure.total_dimension())
      throw invariant_error("PureState: amplitude length mismatch");
    for (const Complex& z : amplitudes)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw invariant_error("PureState: non-finite amplitude");
    if (std::abs(norm2(amplitudes) - 1.0) > 1e-10)
      throw invariant_error("PureState: amplitudes not normalized");
  }

  static PureState normalized_from(PartyStructure s, CVector a) {
    return PureState(std::move(s), normalized(std::move(a)));
  }

  // Computational basis state |index>.
  static PureState basis(PartyStructure s, std::size_t index) {
    CVector a(s.total_dimension(), Complex(0.0, 0.0));
    a.at(index) = 1.0;
    return PureState(std::move(s), std::move(a));
  }

  CMatrix density() const {
    return outer(amplitudes, amplitudes);
  }
};

inline Complex overlap(const PureState& a, const PureState& b) {
  if (!(a.structure == b.structure))
    throw precondition_error("overlap: structure mismatch");
  return inner(a.amplitudes, b.amplitudes);
}

// Full Hermitian PSD trace-one operator; only used for the two-mixed-state
// scenarios whose supports span a plane.
struct DensityOperator {
  PartyStructure structure;
  CMatrix rho;

  DensityOperator() = default;
  DensityOperator(PartyStructure s, CMatrix r)
      : structure(std::move(s)), rho(std::move(r)) {
    const std::size_t n = structure.total_dimension();
    if (rho.rows() != n || rho.cols() != n)
      throw invariant_error("DensityOperator: shape mismatch");
    if (!is_hermitian(rho, 1e-9))
      throw invariant_error("DensityOperator: not Hermitian");
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10)
      throw invariant_error("DensityOperator: trace != 1");
    const HermitianEigen e = hermitian_eig(0.5 * (rho + rho.adjoint()));
    if (e.eigenvalues.back() < -1e-9)
      throw invariant_error("DensityOperator: not positive semidefinite");
  }
};

// -- bipartite state matrix ----------------------------------------------------

// Coefficient matrix of a pure state across a bipartition: the state is
// sum_ij matrix(i, j) |i>_A |j>_B with A the chosen party subset (in declared
// order) on rows. Frobenius norm equals the state norm.
struct StateMatrix {
  CMatrix matrix;

  StateMatrix() = default;
  explicit StateMatrix(CMatrix m) : matrix(std::move(m)) {
    if (std::abs(matrix.frobenius_norm() - 1.0) > 1e-10)
      throw invariant_error("StateMatrix: Frobenius norm != 1");
  }
};

namespace detail {

inline std::vector<std::size_t> index_digits(std::size_t index,
                                             const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

inline std::size_t digits_index(const std::vector<std::size_t>& digits,
                                const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

struct BipartitionMap {
  std::vector<std::size_t> a_parties, b_parties;
  std::vector<std::size_t> a_dims, b_dims;
  std::size_t da = 1, db = 1;

  BipartitionMap(const PartyStructure& s, const std::vector<std::size_t>& subset) {
    std::vector<bool> in_a(s.parties(), false);
    for (std::size_t p : subset) {
      if (p >= s.parties())
        throw precondition_error("bipartition: party index out of range");
      if (in_a[p]) throw precondition_error("bipartition: repeated party");
      in_a[p] = true;
    }
    for (std::size_t p = 0; p < s.parties(); ++p) {
      if (in_a[p]) {
        a_parties.push_back(p);
        a_dims.push_back(s.dims[p]);
        da *= s.dims[p];
      } else {
        b_parties.push_back(p);
        b_dims.push_back(s.dims[p]);
        db *= s.dims[p];
      }
    }
    if (a_parties.empty() || b_parties.empty())
      throw precondition_error("bipartition: subset must be nonempty and proper");
  }

  std::size_t joint_index(std::size_t row, std::size_t col,
                          const PartyStructure& s) const {
    const std::vector<std::size_t> ra = index_digits(row, a_dims);
    const std::vector<std::size_t> rb = index_digits(col, b_dims);
    std::vector<std::size_t> full(s.parties());
    for (std::size_t k = 0; k < a_parties.size(); ++k) full[a_parties[k]] = ra[k];
    for (std::size_t k = 0; k < b_parties.size(); ++k) full[b_parties[k]] = rb[k];
    return digits_index(full, s.dims);
  }
};

}  // namespace detail

inline StateMatrix to_state_matrix(const PureState& s,
                                   const std::vector<std::size_t>& subset) {
  const detail::BipartitionMap map(s.structure, subset);
  CMatrix m(map.da, map.db);
  for (std::size_t i = 0; i < map.da; ++i)
    for (std::size_t j = 0; j < map.db; ++j)
      m(i, j) = s.amplitudes[map.joint_index(i, j, s.structure)];
  return StateMatrix(std::move(m));
}

inline PureState from_state_matrix(const StateMatrix& sm,
                                   const PartyStructure& structure,
                                   const std::vector<std::size_t>& subset) {
  const detail::BipartitionMap map(structure, subset);
  if (sm.matrix.rows() != map.da || sm.matrix.cols() != map.db)
    throw precondition_error("from_state_matrix: shape mismatch");
  CVector a(structure.total_dimension());
  for (std::size_t i = 0; i < map.da; ++i)
    for (std::size_t j = 0; j < map.db; ++j)
      a[map.joint_index(i, j, structure)] = sm.matrix(i, j);
  return PureState(structure, std::move(a));
}

// Bipartition of the first party against everything else; the workhorse split
// for the recursive protocols.
inline StateMatrix first_party_matrix(const PureState& s) {
  return to_state_matrix(s, {0});
}

// -- Schmidt decomposition -----------------------------------------------------

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // non-negative, descending
  CMatrix left;                      // columns: A-side vectors
  CMatrix right;                     // columns: B-side vectors
};

// SVD of the state matrix; the right factor is conjugated so the state equals
// sum_k c_k |left_k> |right_k>.
inline SchmidtDecomposition schmidt(const StateMatrix& sm) {
  const Svd s = svd(sm.matrix);
  SchmidtDecomposition out;
  out.coefficients = s.singular_values;
  out.left = s.u;
  out.right = s.v.conj();
  return out;
}

inline StateMatrix apply_local_unitaries(const StateMatrix& sm, const CMatrix& u,
                                         const CMatrix& v) {
  if (!is_unitary(u, 1e-10) || !is_unitary(v, 1e-10))
    throw precondition_error("apply_local_unitaries: factors not unitary");
  if (u.cols() != sm.matrix.rows() || v.cols() != sm.matrix.cols())
    throw precondition_error("apply_local_unitaries: shape mismatch");
  return StateMatrix(u * sm.matrix * v.transpose());
}

enum class Side { A, B };

// rho_A = M M^†;  rho_B = (M^† M)^T.
inline CMatrix reduced_density(const StateMatrix& sm, Side side) {
  if (side == Side::A) return sm.matrix * sm.matrix.adjoint();
  return (sm.matrix.adjoint() * sm.matrix).transpose();
}

// Two Schmidt coefficients share a degeneracy block iff they differ by less
// than this (absolute); shared with the simultaneous-diagonalization module.
inline constexpr double kSchmidtDegeneracyTol = 1e-8;

// Partition of descending coefficients into degeneracy blocks; returns
// half-open index ranges.
inline std::vector<std::pair<std::size_t, std::size_t>> degeneracy_blocks(
    const std::vector<double>& coefficients) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= coefficients.size(); ++i) {
    if (i == coefficients.size() ||
        coefficients[i - 1] - coefficients[i] >= kSchmidtDegeneracyTol) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }
  return blocks;
}

// -- ensembles -----------------------------------------------------------------

using Hypothesis = std::variant<PureState, DensityOperator>;

// Two states with prior probabilities; the discrimination problem instance.
struct Ensemble {
  Hypothesis state1, state2;
  double p1 = 0.5, p2 = 0.5;

  Ensemble() = default;
  Ensemble(Hypothesis s1, Hypothesis s2, double prior1, double prior2)
      : state1(std::move(s1)), state2(std::move(s2)), p1(prior1), p2(prior2) {
    if (!(p1 >= 0.0) || !(p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > 1e-12)
      throw invariant_error("Ensemble: priors must be nonnegative and sum to 1");
    if (!(structure_of(state1) == structure_of(state2)))
      throw invariant_error("Ensemble: states live on different structures");
  }

  static const PartyStructure& structure_of(const Hypothesis& h) {
    if (const PureState* p = std::get_if<PureState>(&h)) return p->structure;
    return std::get<DensityOperator>(h).structure;
  }

  const PartyStructure& structure() const { return structure_of(state1); }

  bool pure() const {
    return std::holds_alternative<PureState>(state1) &&
           std::holds_alternative<PureState>(state2);
  }

  const PureState& pure1() const { return std::get<PureState>(state1); }
  const PureState& pure2() const { return std::get<PureState>(state2); }

  CMatrix density1() const { return density_of(state1); }
  CMatrix density2() const { return density_of(state2); }

  static CMatrix density_of(const Hypothesis& h) {
    if (const PureState* p = std::get_if<PureState>(&h)) return p->density();
    return std::get<DensityOperator>(h).rho;
  }
};

}  // namespace locdisc
