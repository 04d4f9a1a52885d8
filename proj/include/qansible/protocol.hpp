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

/// \file protocol.hpp
/// The ansible protocol: Bob's basis-encoded measurement on one half of a
/// singlet pair, Alice's CNOT amplification cascade, her sub-ensemble
/// measurement plan and decision rule, and a numeric audit of the textbook
/// identities the scheme is built from.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qansible/quantum.hpp"

namespace qansible {

/// Largest register the amplification cascade will build by default.
/// 12 qubits keeps exhaustive branch enumeration (2^12 paths) sub-second.
inline constexpr int kDefaultQubitBudget = 12;

/// Thrown when an operation would exceed the qubit budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of one protocol run.
struct ProtocolConfig {
  int n_total = 4;  ///< Alice's particle count after amplification.
  int k_x = 2;      ///< Particles measured along x.
  int k_z = 2;      ///< Particles measured along z.
  int bob_bit = 0;  ///< The bit Bob encodes: 0 -> z axis, 1 -> x axis.
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless n_total >= 1, k_x, k_z >= 0,
  /// k_x + k_z == n_total and bob_bit is 0 or 1; throws ResourceError when
  /// n_total exceeds the budget.
  void validate(int budget = kDefaultQubitBudget) const;
};

/// Alice's verdict about Bob's bit.
enum class Decision { Zero, One, Indeterminate };

std::string to_string(Decision decision);

/// Threshold rule on |mean z spin|: above the cut decide 0, below decide 1,
/// exactly at the cut report Indeterminate.
struct DecisionRule {
  double threshold;

  /// Throws std::invalid_argument unless threshold lies strictly
  /// between 0 and 1/2.
  explicit DecisionRule(double threshold = 0.25);
};

/// One branch of Bob's measurement together with the single-qubit state
/// Alice's particle collapses to (defined up to a global phase).
struct BobBranch {
  MeasurementBranch bob;
  PureState alice_state;
};

/// Outcome lists and means from one sweep of Alice's measurement plan.
struct MeasurePlanResult {
  std::vector<double> x_outcomes;
  std::vector<double> z_outcomes;
  double mean_sx = 0.0;  ///< Average of x_outcomes; 0 when the list is empty.
  double mean_sz = 0.0;  ///< Average of z_outcomes; 0 when the list is empty.
};

/// Full record of a single protocol trial.
struct RunRecord {
  int bob_bit;
  MeasurementAxis bob_axis;  ///< z for bit 0, x for bit 1.
  double bob_outcome;        ///< +1/2 or -1/2.
  std::vector<double> alice_x_outcomes;
  std::vector<double> alice_z_outcomes;
  double mean_sx;
  double mean_sz;
  Decision decoded;
};

/// One checked identity in the audit report.
struct EquationCheck {
  std::string id;
  double deviation;  ///< Largest absolute entrywise difference found.
  bool pass;         ///< deviation <= lin::kAlgebraTol.
};

/// Result of auditing every displayed identity the protocol relies on.
struct EquationAuditReport {
  std::vector<EquationCheck> checks;

  bool all_pass() const;
};

/// Measures Bob's half of the singlet along z (bob_bit 0) or x (bob_bit 1)
/// and returns both branches, each with probability 1/2, the + outcome
/// first, together with Alice's collapsed qubit.
std::vector<BobBranch> bob_encode_branches(int bob_bit);

/// Grows a single qubit into an n_total-qubit register by repeatedly
/// appending a fresh |+z> ancilla and applying CNOT controlled on the first
/// qubit. Throws ResourceError when n_total exceeds the budget.
PureState alice_amplify(const PureState& initial, int n_total,
                        int budget = kDefaultQubitBudget);

/// Same cascade, but step i uses controls[i] as the CNOT control qubit.
/// controls[i] must name a qubit that already exists when ancilla i+1 is
/// appended. Exists to show the control choice does not matter.
PureState alice_amplify_with_controls(const PureState& initial, int n_total,
                                      const std::vector<int>& controls,
                                      int budget = kDefaultQubitBudget);

/// Measures the first k_x qubits along x, then the remaining k_z along z,
/// collapsing sequentially and drawing from rng. Requires
/// k_x + k_z == state.n_qubits().
MeasurePlanResult alice_measure_plan(const PureState& state, int k_x, int k_z,
                                     RandomStream& rng);

/// Applies the threshold rule to the measured means. Only the z mean enters
/// the rule; the x mean is part of the record the rule could in principle
/// inspect.
Decision alice_decide(double mean_sx, double mean_sz, const DecisionRule& rule);

/// Runs one full trial: sample Bob's branch, amplify Alice's collapsed
/// qubit to n_total, execute the measurement plan, decode. Deterministic
/// given config.seed.
RunRecord run_single_trial(const ProtocolConfig& config,
                           const DecisionRule& rule = DecisionRule{});

/// Recomputes each displayed identity behind the protocol and reports the
/// deviation: the singlet vector, the z basis columns, the CNOT matrix, the
/// two z-state cloning products, both x-state decompositions, the two
/// entangling cloner outputs (with exact phase), the Bell-state reduced
/// states, and the unpolarised-input conjugation identity. Failures are
/// report entries, never exceptions.
EquationAuditReport audit_equations();

/// Same audit evaluated with a caller-supplied matrix in place of CNOT.
/// Accepts any 4x4 matrix so tests can inject faults that a Gate would
/// reject as non-unitary.
EquationAuditReport audit_equations(const lin::CMatrix& cnot_matrix);

}  // namespace qansible
