// Copyright 2026 The qansible developers
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

/**
 * @file
 * Qubit semantics: pure states, density matrices, gates, spin observables
 * and projective measurement with both branch enumeration and seeded
 * sampling. Qubit 0 is the most significant index of the flattened
 * amplitude vector, so a two-qubit gate matrix acts with its first factor
 * on the lower qubit index.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qansible/linalg.hpp"

namespace qansible {

/// Pure states are admitted when their norm is within this of 1.
inline constexpr double kStateNormTol = 1e-12;
/// Density matrices must be Hermitian and unit trace within this.
inline constexpr double kDensityTol = 1e-10;
/// Smallest eigenvalue a density matrix may carry (numerical PSD floor).
inline constexpr double kDensityEigFloor = -1e-9;
/// Gates must satisfy U†U = I within this.
inline constexpr double kUnitaryTol = 1e-12;
/// Measurement branches below this probability carry no post state.
inline constexpr double kNegligibleProbability = 1e-24;

/// Deterministic stream of uniform doubles in [0, 1) with 53-bit
/// resolution, fully defined by its 64-bit seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a trial index into an independent sub-seed.
/// Trials seeded this way may run concurrently and still reproduce.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Normalised amplitude vector over n qubits.
class PureState {
 public:
  PureState(int n_qubits, lin::CVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const lin::CVector& amplitudes() const { return amps_; }

 private:
  int n_qubits_;
  lin::CVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite operator over n qubits.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, lin::CMatrix matrix);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const lin::CMatrix& matrix() const { return matrix_; }

 private:
  int n_qubits_;
  lin::CMatrix matrix_;
};

/// Unitary operator acting on a fixed number of qubits.
class Gate {
 public:
  Gate(int arity, lin::CMatrix matrix);

  int arity() const { return arity_; }
  const lin::CMatrix& matrix() const { return matrix_; }

 private:
  int arity_;
  lin::CMatrix matrix_;
};

/// Unit 3-vector giving a spin measurement direction.
struct MeasurementAxis {
  Eigen::Vector3d direction;

  explicit MeasurementAxis(const Eigen::Vector3d& dir);

  static MeasurementAxis x() { return MeasurementAxis({1.0, 0.0, 0.0}); }
  static MeasurementAxis y() { return MeasurementAxis({0.0, 1.0, 0.0}); }
  static MeasurementAxis z() { return MeasurementAxis({0.0, 0.0, 1.0}); }
};

/// Spin projection observable S_n = (n.sigma)/2, in units of hbar = 1.
struct SpinObservable {
  MeasurementAxis axis;
  lin::CMatrix matrix;

  explicit SpinObservable(const MeasurementAxis& measurement_axis);
};

/// One branch of a projective spin measurement. The post state is absent
/// for branches of negligible probability.
struct MeasurementBranch {
  double outcome;  // +1/2 or -1/2
  double probability;
  std::optional<PureState> post_state;
};

enum class BellKind { PsiMinus, PsiPlus, PhiPlus, PhiMinus };
enum class Sign { Plus, Minus };

/// Computational basis state; bit 0 maps to spin up along z, bit 1 to
/// spin down.
PureState basis_state(const std::vector<int>& bits);

/// Spin eigenstates along x: (1,1)/sqrt(2) for Plus, (-1,1)/sqrt(2)
/// for Minus.
PureState x_eigenstate(Sign sign);

/// Spin eigenstate of n.sigma for an arbitrary axis. Reduces to
/// basis_state for the z axis and to x_eigenstate for the x axis.
PureState axis_eigenstate(const MeasurementAxis& axis, Sign sign);

/// One of the four maximally entangled two-qubit states.
PureState bell_state(BellKind kind);

/// (|0...0> + |1...1>)/sqrt(2) over n qubits.
PureState ghz_state(int n_qubits);

/// Product of two registers; `a` occupies the lower qubit indices.
PureState tensor(const PureState& a, const PureState& b);

/// Controlled-NOT with the control on the first factor.
Gate cnot();

/// Identity gate on `arity` qubits.
Gate identity_gate(int arity);

/// Unitary copying the known single-qubit state `psi` (and its orthogonal
/// complement) from the blank state onto a second register. On the blank's
/// orthogonal sector the complement is written instead, which makes the
/// cloner for spin-up along z exactly the CNOT matrix.
Gate known_state_cloner(const PureState& psi, const PureState& blank);

/// Applies `g` to the listed target qubits (distinct, one per gate
/// factor), acting as the identity elsewhere.
PureState apply_gate(const PureState& state, const Gate& g,
                     const std::vector<int>& targets);

/// Outer product |s><s|.
DensityMatrix to_density(const PureState& state);

/// Partial trace over every qubit not in `keep` (0-based, strictly
/// increasing).
DensityMatrix reduced_state(const DensityMatrix& rho, const std::vector<int>& keep);

/// Tr(rho^2); 1 for pure states, 1/2 for a maximally mixed qubit.
double purity(const DensityMatrix& rho);

/// Tr(rho . S) with the observable embedded on one qubit.
double expectation(const DensityMatrix& rho, const SpinObservable& obs, int qubit);

/// Both measurement branches for a spin measurement along `axis` on one
/// qubit: outcome +1/2 first, then -1/2. Probabilities follow the Born
/// rule; zero-probability branches are retained with probability 0.
std::vector<MeasurementBranch> measure_branches(const PureState& state,
                                                const MeasurementAxis& axis,
                                                int qubit);

/// Draws one branch with its Born probability from the seeded stream.
MeasurementBranch measure_sample(const PureState& state, const MeasurementAxis& axis,
                                 int qubit, RandomStream& rng);

/// <a|b>.
lin::Complex inner_product(const PureState& a, const PureState& b);

/// |<a|b>|; 1 iff the states agree up to a global phase.
double fidelity(const PureState& a, const PureState& b);

/// Largest entrywise amplitude difference; phase sensitive.
double max_abs_diff(const PureState& a, const PureState& b);

namespace detail {

/// Applies a (not necessarily unitary) 2x2 operator to one qubit of an
/// n-qubit amplitude vector.
lin::CVector apply_one_qubit_op(const lin::CVector& amps, int n_qubits, int qubit,
                                const lin::CMatrix& op);

/// Contracts one qubit with a single-qubit bra, returning the (n-1)-qubit
/// amplitude vector <phi|_qubit |amps>. Not normalised in general.
lin::CVector contract_qubit(const lin::CVector& amps, int n_qubits, int qubit,
                            const lin::CVector& phi);

}  // namespace detail

}  // namespace qansible
