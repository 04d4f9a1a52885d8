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

#include "qansible/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

namespace qansible {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

double vec_deviation(const lin::CVector& a, const lin::CVector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double mat_deviation(const lin::CMatrix& a, const lin::CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double mean_or_zero(const std::vector<double>& values) {
  if (values.empty()) {
    return 0.0;
  }
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

}  // namespace

void ProtocolConfig::validate(int budget) const {
  if (bob_bit != 0 && bob_bit != 1) {
    throw std::invalid_argument("ProtocolConfig: bob_bit must be 0 or 1");
  }
  if (n_total < 1) {
    throw std::invalid_argument("ProtocolConfig: n_total must be at least 1");
  }
  if (k_x < 0 || k_z < 0) {
    throw std::invalid_argument(
        "ProtocolConfig: sub-ensemble sizes must be non-negative");
  }
  if (k_x + k_z != n_total) {
    std::ostringstream msg;
    msg << "ProtocolConfig: k_x + k_z = " << (k_x + k_z)
        << " does not equal n_total = " << n_total;
    throw std::invalid_argument(msg.str());
  }
  if (n_total > budget) {
    std::ostringstream msg;
    msg << "ProtocolConfig: n_total = " << n_total
        << " exceeds the qubit budget of " << budget;
    throw ResourceError(msg.str());
  }
}

std::string to_string(Decision decision) {
  switch (decision) {
    case Decision::Zero:
      return "0";
    case Decision::One:
      return "1";
    case Decision::Indeterminate:
      return "indeterminate";
  }
  throw std::logic_error("to_string: unknown Decision value");
}

DecisionRule::DecisionRule(double threshold_value) : threshold(threshold_value) {
  if (!(threshold > 0.0) || !(threshold < 0.5)) {
    std::ostringstream msg;
    msg << "DecisionRule: threshold " << threshold
        << " must lie strictly between 0 and 1/2";
    throw std::invalid_argument(msg.str());
  }
}

bool EquationAuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const EquationCheck& c) { return c.pass; });
}

std::vector<BobBranch> bob_encode_branches(int bob_bit) {
  if (bob_bit != 0 && bob_bit != 1) {
    throw std::invalid_argument("bob_encode_branches: bob_bit must be 0 or 1");
  }
  const PureState singlet = bell_state(BellKind::PsiMinus);
  const MeasurementAxis axis =
      bob_bit == 0 ? MeasurementAxis::z() : MeasurementAxis::x();
  auto branches = measure_branches(singlet, axis, /*qubit=*/1);

  std::vector<BobBranch> out;
  out.reserve(2);
  const Sign signs[2] = {Sign::Plus, Sign::Minus};
  for (int i = 0; i < 2; ++i) {
    const lin::CVector phi = axis_eigenstate(axis, signs[i]).amplitudes();
    lin::CVector alice =
        detail::contract_qubit(singlet.amplitudes(), 2, /*qubit=*/1, phi);
    alice /= alice.norm();
    out.push_back(BobBranch{std::move(branches[static_cast<std::size_t>(i)]),
                            PureState(1, std::move(alice))});
  }
  return out;
}

PureState alice_amplify_with_controls(const PureState& initial, int n_total,
                                      const std::vector<int>& controls,
                                      int budget) {
  if (n_total < 1) {
    throw std::invalid_argument("alice_amplify: n_total must be at least 1");
  }
  if (n_total > budget) {
    std::ostringstream msg;
    msg << "alice_amplify: n_total = " << n_total
        << " exceeds the qubit budget of " << budget;
    throw ResourceError(msg.str());
  }
  if (initial.n_qubits() > n_total) {
    std::ostringstream msg;
    msg << "alice_amplify: initial state already has " << initial.n_qubits()
        << " qubits, more than n_total = " << n_total;
    throw std::invalid_argument(msg.str());
  }
  if (static_cast<int>(controls.size()) != n_total - initial.n_qubits()) {
    std::ostringstream msg;
    msg << "alice_amplify: expected " << (n_total - initial.n_qubits())
        << " control choices, got " << controls.size();
    throw std::invalid_argument(msg.str());
  }

  PureState state = initial;
  const Gate gate = cnot();
  const PureState ancilla = basis_state({0});
  for (int control : controls) {
    const int existing = state.n_qubits();
    if (control < 0 || control >= existing) {
      std::ostringstream msg;
      msg << "alice_amplify: control qubit " << control
          << " does not exist yet at register size " << existing;
      throw std::invalid_argument(msg.str());
    }
    state = tensor(state, ancilla);
    state = apply_gate(state, gate, {control, existing});
  }
  return state;
}

PureState alice_amplify(const PureState& initial, int n_total, int budget) {
  const int steps = std::max(0, n_total - initial.n_qubits());
  return alice_amplify_with_controls(initial, n_total,
                                     std::vector<int>(steps, 0), budget);
}

MeasurePlanResult alice_measure_plan(const PureState& state, int k_x, int k_z,
                                     RandomStream& rng) {
  if (k_x < 0 || k_z < 0 || k_x + k_z != state.n_qubits()) {
    std::ostringstream msg;
    msg << "alice_measure_plan: split (" << k_x << ", " << k_z
        << ") does not cover " << state.n_qubits() << " qubits";
    throw std::invalid_argument(msg.str());
  }

  MeasurePlanResult result;
  result.x_outcomes.reserve(static_cast<std::size_t>(k_x));
  result.z_outcomes.reserve(static_cast<std::size_t>(k_z));
  PureState current = state;
  for (int q = 0; q < k_x + k_z; ++q) {
    const MeasurementAxis axis =
        q < k_x ? MeasurementAxis::x() : MeasurementAxis::z();
    MeasurementBranch branch = measure_sample(current, axis, q, rng);
    if (!branch.post_state) {
      throw std::logic_error("alice_measure_plan: sampled a zero-probability branch");
    }
    (q < k_x ? result.x_outcomes : result.z_outcomes).push_back(branch.outcome);
    current = std::move(*branch.post_state);
  }
  result.mean_sx = mean_or_zero(result.x_outcomes);
  result.mean_sz = mean_or_zero(result.z_outcomes);
  return result;
}

Decision alice_decide(double mean_sx, double mean_sz, const DecisionRule& rule) {
  (void)mean_sx;
  const double magnitude = std::abs(mean_sz);
  if (magnitude > rule.threshold) {
    return Decision::Zero;
  }
  if (magnitude < rule.threshold) {
    return Decision::One;
  }
  return Decision::Indeterminate;
}

RunRecord run_single_trial(const ProtocolConfig& config, const DecisionRule& rule) {
  config.validate();
  RandomStream rng(config.seed);

  const auto branches = bob_encode_branches(config.bob_bit);
  const double u = rng.uniform();
  const BobBranch& picked =
      u < branches[0].bob.probability ? branches[0] : branches[1];

  const PureState amplified = alice_amplify(picked.alice_state, config.n_total);
  const MeasurePlanResult plan =
      alice_measure_plan(amplified, config.k_x, config.k_z, rng);
  return RunRecord{config.bob_bit,
                   config.bob_bit == 0 ? MeasurementAxis::z() : MeasurementAxis::x(),
                   picked.bob.outcome,
                   plan.x_outcomes,
                   plan.z_outcomes,
                   plan.mean_sx,
                   plan.mean_sz,
                   alice_decide(plan.mean_sx, plan.mean_sz, rule)};
}

EquationAuditReport audit_equations(const lin::CMatrix& cnot_matrix) {
  if (cnot_matrix.rows() != 4 || cnot_matrix.cols() != 4) {
    throw std::invalid_argument("audit_equations: expected a 4x4 matrix");
  }

  const lin::CVector plus_z = basis_state({0}).amplitudes();
  const lin::CVector minus_z = basis_state({1}).amplitudes();
  const lin::CVector plus_x = x_eigenstate(Sign::Plus).amplitudes();
  const lin::CVector minus_x = x_eigenstate(Sign::Minus).amplitudes();

  std::vector<EquationCheck> checks;
  auto add = [&checks](std::string id, double deviation) {
    checks.push_back({std::move(id), deviation, deviation <= lin::kAlgebraTol});
  };

  // Singlet written out in the z eigenbasis and in the x eigenbasis; the
  // anticorrelated form is the same vector along both axes.
  const lin::CVector singlet = bell_state(BellKind::PsiMinus).amplitudes();
  const lin::CVector singlet_z =
      (lin::kron(plus_z, minus_z) - lin::kron(minus_z, plus_z)) * kInvSqrt2;
  const lin::CVector singlet_x =
      (lin::kron(plus_x, minus_x) - lin::kron(minus_x, plus_x)) * kInvSqrt2;
  add("singlet-vector",
      std::max(vec_deviation(singlet, singlet_z), vec_deviation(singlet, singlet_x)));

  lin::CVector col_up(2);
  col_up << 1, 0;
  lin::CVector col_down(2);
  col_down << 0, 1;
  add("z-basis", std::max(vec_deviation(plus_z, col_up),
                          vec_deviation(minus_z, col_down)));

  lin::CMatrix reference(4, 4);
  reference << 1, 0, 0, 0,
               0, 1, 0, 0,
               0, 0, 0, 1,
               0, 0, 1, 0;
  add("cnot-matrix", mat_deviation(cnot_matrix, reference));

  add("clone-plus-z", vec_deviation(cnot_matrix * lin::kron(plus_z, plus_z),
                                    lin::kron(plus_z, plus_z)));
  add("clone-minus-z", vec_deviation(cnot_matrix * lin::kron(minus_z, plus_z),
                                     lin::kron(minus_z, minus_z)));

  lin::CVector plus_x_column(2);
  plus_x_column << kInvSqrt2, kInvSqrt2;
  add("plus-x-decomposition",
      std::max(vec_deviation(plus_x, plus_x_column),
               vec_deviation(plus_x, (plus_z + minus_z) * kInvSqrt2)));

  const lin::CVector phi_plus =
      (lin::kron(plus_z, plus_z) + lin::kron(minus_z, minus_z)) * kInvSqrt2;
  add("entangling-clone-plus-x",
      std::max(vec_deviation(cnot_matrix * lin::kron(plus_x, plus_z), phi_plus),
               vec_deviation(bell_state(BellKind::PhiPlus).amplitudes(), phi_plus)));

  const lin::CMatrix rho_bell = phi_plus * phi_plus.adjoint();
  const lin::CMatrix half_identity = 0.5 * lin::CMatrix::Identity(2, 2);
  const auto two_qubits = lin::SubsystemShape::qubits(2);
  add("bell-reduced-states",
      std::max(
          mat_deviation(lin::partial_trace(rho_bell, two_qubits, {0}), half_identity),
          mat_deviation(lin::partial_trace(rho_bell, two_qubits, {1}), half_identity)));

  const lin::CMatrix project_up = plus_z * plus_z.adjoint();
  const lin::CMatrix project_down = minus_z * minus_z.adjoint();
  const lin::CMatrix conjugated =
      cnot_matrix * lin::kron(half_identity, project_up) * cnot_matrix.adjoint();
  const lin::CMatrix separable = 0.5 * (lin::kron(project_up, project_up) +
                                        lin::kron(project_down, project_down));
  add("unpolarized-clone-separable", mat_deviation(conjugated, separable));

  lin::CVector minus_x_column(2);
  minus_x_column << -kInvSqrt2, kInvSqrt2;
  add("minus-x-decomposition",
      std::max(vec_deviation(minus_x, minus_x_column),
               vec_deviation(minus_x, (minus_z - plus_z) * kInvSqrt2)));

  const lin::CVector minus_phi_minus =
      (lin::kron(minus_z, minus_z) - lin::kron(plus_z, plus_z)) * kInvSqrt2;
  add("entangling-clone-minus-x",
      std::max(
          vec_deviation(cnot_matrix * lin::kron(minus_x, plus_z), minus_phi_minus),
          vec_deviation(-bell_state(BellKind::PhiMinus).amplitudes(), minus_phi_minus)));

  return EquationAuditReport{std::move(checks)};
}

EquationAuditReport audit_equations() { return audit_equations(cnot().matrix()); }

}  // namespace qansible
