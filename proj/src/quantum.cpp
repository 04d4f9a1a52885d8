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

#include "qansible/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qansible {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

Eigen::Index bit_shift(int n_qubits, int qubit) {
  // Qubit 0 is the most significant index.
  return static_cast<Eigen::Index>(n_qubits - 1 - qubit);
}

void check_qubit_index(int qubit, int n_qubits, const char* where) {
  if (qubit < 0 || qubit >= n_qubits) {
    std::ostringstream msg;
    msg << where << ": qubit index " << qubit << " out of range for "
        << n_qubits << " qubits";
    throw std::invalid_argument(msg.str());
  }
}

// Orthogonal complement of a single-qubit state (a, b) -> (-conj(b), conj(a)).
lin::CVector perp(const lin::CVector& v) {
  lin::CVector out(2);
  out << -std::conj(v(1)), std::conj(v(0));
  return out;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 step over the combined word.
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PureState::PureState(int n_qubits, lin::CVector amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("PureState: need at least one qubit");
  }
  const Eigen::Index expected = Eigen::Index{1} << n_qubits_;
  if (amps_.size() != expected) {
    std::ostringstream msg;
    msg << "PureState: expected " << expected << " amplitudes for " << n_qubits_
        << " qubits, got " << amps_.size();
    throw std::invalid_argument(msg.str());
  }
  if (!lin::all_finite(amps_)) {
    throw std::invalid_argument("PureState: amplitudes must be finite");
  }
  if (std::abs(amps_.norm() - 1.0) > kStateNormTol) {
    std::ostringstream msg;
    msg << "PureState: amplitudes are not normalised (norm " << amps_.norm() << ")";
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix::DensityMatrix(int n_qubits, lin::CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (n_qubits_ < 1) {
    throw std::invalid_argument("DensityMatrix: need at least one qubit");
  }
  const Eigen::Index expected = Eigen::Index{1} << n_qubits_;
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    std::ostringstream msg;
    msg << "DensityMatrix: expected a " << expected << "x" << expected
        << " matrix for " << n_qubits_ << " qubits";
    throw std::invalid_argument(msg.str());
  }
  if (!lin::all_finite(matrix_)) {
    throw std::invalid_argument("DensityMatrix: entries must be finite");
  }
  double asym = 0.0;
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    for (Eigen::Index j = i; j < matrix_.cols(); ++j) {
      asym = std::max(asym, std::abs(matrix_(i, j) - std::conj(matrix_(j, i))));
    }
  }
  if (asym > kDensityTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian, max asymmetry " << asym;
    throw std::invalid_argument(msg.str());
  }
  if (std::abs(matrix_.trace() - lin::Complex{1.0, 0.0}) > kDensityTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << matrix_.trace() << " is not 1";
    throw std::invalid_argument(msg.str());
  }
  const auto eigs = lin::hermitian_eigenvalues(matrix_);
  if (eigs.back() < kDensityEigFloor) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue "
        << eigs.back() << ")";
    throw std::invalid_argument(msg.str());
  }
}

Gate::Gate(int arity, lin::CMatrix matrix) : arity_(arity), matrix_(std::move(matrix)) {
  if (arity_ < 1) {
    throw std::invalid_argument("Gate: arity must be positive");
  }
  const Eigen::Index expected = Eigen::Index{1} << arity_;
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    std::ostringstream msg;
    msg << "Gate: expected a " << expected << "x" << expected
        << " matrix for arity " << arity_;
    throw std::invalid_argument(msg.str());
  }
  const lin::CMatrix gram = matrix_.adjoint() * matrix_;
  const double dev =
      (gram - lin::CMatrix::Identity(expected, expected)).cwiseAbs().maxCoeff();
  if (dev > kUnitaryTol) {
    std::ostringstream msg;
    msg << "Gate: matrix is not unitary (max deviation " << dev << ")";
    throw std::invalid_argument(msg.str());
  }
}

MeasurementAxis::MeasurementAxis(const Eigen::Vector3d& dir) : direction(dir) {
  if (std::abs(direction.norm() - 1.0) > kStateNormTol) {
    std::ostringstream msg;
    msg << "MeasurementAxis: direction is not a unit vector (norm "
        << direction.norm() << ")";
    throw std::invalid_argument(msg.str());
  }
}

SpinObservable::SpinObservable(const MeasurementAxis& measurement_axis)
    : axis(measurement_axis), matrix(2, 2) {
  const double nx = axis.direction.x();
  const double ny = axis.direction.y();
  const double nz = axis.direction.z();
  matrix << lin::Complex{nz, 0.0} * 0.5, lin::Complex{nx, -ny} * 0.5,
      lin::Complex{nx, ny} * 0.5, lin::Complex{-nz, 0.0} * 0.5;
}

PureState basis_state(const std::vector<int>& bits) {
  if (bits.empty()) {
    throw std::invalid_argument("basis_state: bit list must not be empty");
  }
  Eigen::Index index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("basis_state: bits must be 0 or 1");
    }
    index = (index << 1) | static_cast<Eigen::Index>(b);
  }
  const int n = static_cast<int>(bits.size());
  lin::CVector amps = lin::CVector::Zero(Eigen::Index{1} << n);
  amps(index) = 1.0;
  return PureState(n, std::move(amps));
}

PureState x_eigenstate(Sign sign) {
  lin::CVector amps(2);
  if (sign == Sign::Plus) {
    amps << kInvSqrt2, kInvSqrt2;
  } else {
    amps << -kInvSqrt2, kInvSqrt2;
  }
  return PureState(1, std::move(amps));
}

PureState axis_eigenstate(const MeasurementAxis& axis, Sign sign) {
  const double theta = std::acos(std::clamp(axis.direction.z(), -1.0, 1.0));
  const double phi = std::atan2(axis.direction.y(), axis.direction.x());
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const lin::Complex az = std::polar(1.0, phi);
  lin::CVector amps(2);
  if (sign == Sign::Plus) {
    amps << lin::Complex{c, 0.0}, az * s;
  } else {
    amps << lin::Complex{-s, 0.0}, az * c;
  }
  return PureState(1, std::move(amps));
}

PureState bell_state(BellKind kind) {
  lin::CVector amps = lin::CVector::Zero(4);
  switch (kind) {
    case BellKind::PsiMinus:
      amps(1) = kInvSqrt2;
      amps(2) = -kInvSqrt2;
      break;
    case BellKind::PsiPlus:
      amps(1) = kInvSqrt2;
      amps(2) = kInvSqrt2;
      break;
    case BellKind::PhiPlus:
      amps(0) = kInvSqrt2;
      amps(3) = kInvSqrt2;
      break;
    case BellKind::PhiMinus:
      amps(0) = kInvSqrt2;
      amps(3) = -kInvSqrt2;
      break;
  }
  return PureState(2, std::move(amps));
}

PureState ghz_state(int n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("ghz_state: need at least one qubit");
  }
  lin::CVector amps = lin::CVector::Zero(Eigen::Index{1} << n_qubits);
  amps(0) = kInvSqrt2;
  amps(amps.size() - 1) = kInvSqrt2;
  return PureState(n_qubits, std::move(amps));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(a.n_qubits() + b.n_qubits(),
                   lin::kron(a.amplitudes(), b.amplitudes()));
}

Gate cnot() {
  lin::CMatrix m(4, 4);
  m << 1, 0, 0, 0,
       0, 1, 0, 0,
       0, 0, 0, 1,
       0, 0, 1, 0;
  return Gate(2, std::move(m));
}

Gate identity_gate(int arity) {
  const Eigen::Index dim = Eigen::Index{1} << arity;
  return Gate(arity, lin::CMatrix::Identity(dim, dim));
}

Gate known_state_cloner(const PureState& psi, const PureState& blank) {
  if (psi.n_qubits() != 1 || blank.n_qubits() != 1) {
    throw std::invalid_argument("known_state_cloner: psi and blank must be single-qubit states");
  }
  const lin::CVector& p = psi.amplitudes();
  const lin::CVector& b = blank.amplitudes();
  const lin::CVector pp = perp(p);
  const lin::CVector bp = perp(b);

  const lin::CVector in[4] = {lin::kron(p, b), lin::kron(pp, b),
                              lin::kron(p, bp), lin::kron(pp, bp)};
  const lin::CVector out[4] = {lin::kron(p, p), lin::kron(pp, pp),
                               lin::kron(p, pp), lin::kron(pp, p)};
  lin::CMatrix u = lin::CMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    u += out[k] * in[k].adjoint();
  }
  return Gate(2, std::move(u));
}

PureState apply_gate(const PureState& state, const Gate& g,
                     const std::vector<int>& targets) {
  const int n = state.n_qubits();
  const int k = g.arity();
  if (static_cast<int>(targets.size()) != k) {
    std::ostringstream msg;
    msg << "apply_gate: gate arity " << k << " does not match " << targets.size()
        << " targets";
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    check_qubit_index(targets[i], n, "apply_gate");
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("apply_gate: duplicate target qubit");
      }
    }
  }

  const Eigen::Index dim = state.dim();
  const Eigen::Index sub_dim = Eigen::Index{1} << k;
  Eigen::Index target_mask = 0;
  std::vector<Eigen::Index> shifts(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    shifts[i] = bit_shift(n, targets[i]);
    target_mask |= Eigen::Index{1} << shifts[i];
  }

  const lin::CVector& amps = state.amplitudes();
  lin::CVector out(dim);
  lin::CVector sub(sub_dim);
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & target_mask) {
      continue;
    }
    for (Eigen::Index j = 0; j < sub_dim; ++j) {
      Eigen::Index idx = base;
      for (int i = 0; i < k; ++i) {
        if ((j >> (k - 1 - i)) & 1) {
          idx |= Eigen::Index{1} << shifts[static_cast<std::size_t>(i)];
        }
      }
      sub(j) = amps(idx);
    }
    const lin::CVector mapped = g.matrix() * sub;
    for (Eigen::Index j = 0; j < sub_dim; ++j) {
      Eigen::Index idx = base;
      for (int i = 0; i < k; ++i) {
        if ((j >> (k - 1 - i)) & 1) {
          idx |= Eigen::Index{1} << shifts[static_cast<std::size_t>(i)];
        }
      }
      out(idx) = mapped(j);
    }
  }
  return PureState(n, std::move(out));
}

DensityMatrix to_density(const PureState& state) {
  return DensityMatrix(state.n_qubits(),
                       state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix reduced_state(const DensityMatrix& rho, const std::vector<int>& keep) {
  lin::CMatrix reduced = lin::partial_trace(
      rho.matrix(), lin::SubsystemShape::qubits(rho.n_qubits()), keep);
  return DensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double expectation(const DensityMatrix& rho, const SpinObservable& obs, int qubit) {
  check_qubit_index(qubit, rho.n_qubits(), "expectation");
  const lin::CMatrix reduced = lin::partial_trace(
      rho.matrix(), lin::SubsystemShape::qubits(rho.n_qubits()), {qubit});
  return (reduced * obs.matrix).trace().real();
}

std::vector<MeasurementBranch> measure_branches(const PureState& state,
                                                const MeasurementAxis& axis,
                                                int qubit) {
  check_qubit_index(qubit, state.n_qubits(), "measure_branches");
  std::vector<MeasurementBranch> branches;
  branches.reserve(2);
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const lin::CVector eig = axis_eigenstate(axis, sign).amplitudes();
    const lin::CMatrix projector = eig * eig.adjoint();
    lin::CVector projected =
        detail::apply_one_qubit_op(state.amplitudes(), state.n_qubits(), qubit, projector);
    const double prob = projected.squaredNorm();
    std::optional<PureState> post;
    if (prob > kNegligibleProbability) {
      projected /= std::sqrt(prob);
      post = PureState(state.n_qubits(), std::move(projected));
    }
    branches.push_back({sign == Sign::Plus ? 0.5 : -0.5, prob, std::move(post)});
  }
  return branches;
}

MeasurementBranch measure_sample(const PureState& state, const MeasurementAxis& axis,
                                 int qubit, RandomStream& rng) {
  auto branches = measure_branches(state, axis, qubit);
  const double u = rng.uniform();
  return u < branches[0].probability ? std::move(branches[0]) : std::move(branches[1]);
}

lin::Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const PureState& a, const PureState& b) {
  return std::abs(inner_product(a, b));
}

double max_abs_diff(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  }
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

namespace detail {

lin::CVector apply_one_qubit_op(const lin::CVector& amps, int n_qubits, int qubit,
                                const lin::CMatrix& op) {
  const Eigen::Index shift = bit_shift(n_qubits, qubit);
  const Eigen::Index bit = Eigen::Index{1} << shift;
  lin::CVector out(amps.size());
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    if (i & bit) {
      continue;
    }
    const lin::Complex a0 = amps(i);
    const lin::Complex a1 = amps(i | bit);
    out(i) = op(0, 0) * a0 + op(0, 1) * a1;
    out(i | bit) = op(1, 0) * a0 + op(1, 1) * a1;
  }
  return out;
}

lin::CVector contract_qubit(const lin::CVector& amps, int n_qubits, int qubit,
                            const lin::CVector& phi) {
  const Eigen::Index shift = bit_shift(n_qubits, qubit);
  const Eigen::Index low_mask = (Eigen::Index{1} << shift) - 1;
  lin::CVector out(amps.size() / 2);
  for (Eigen::Index r = 0; r < out.size(); ++r) {
    const Eigen::Index high = (r & ~low_mask) << 1;
    const Eigen::Index low = r & low_mask;
    const Eigen::Index i0 = high | low;
    const Eigen::Index i1 = i0 | (Eigen::Index{1} << shift);
    out(r) = std::conj(phi(0)) * amps(i0) + std::conj(phi(1)) * amps(i1);
  }
  return out;
}

}  // namespace detail

}  // namespace qansible
