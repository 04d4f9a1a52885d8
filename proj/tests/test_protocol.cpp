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
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>

using namespace qansible;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

using JointDistribution = std::map<std::vector<int>, double>;

// Measures every qubit of `state` in the per-qubit axis given by `plan`,
// visiting qubits in the order the plan lists them, and accumulates the
// joint outcome distribution keyed by qubit index. Branch walks with
// different plan orderings must agree because the observables commute.
void walk_plan(const PureState& state, double prob,
               const std::vector<std::pair<int, MeasurementAxis>>& plan,
               std::size_t step, std::vector<int>& signs,
               JointDistribution& dist) {
  if (step == plan.size()) {
    dist[signs] += prob;
    return;
  }
  const auto& [qubit, axis] = plan[step];
  for (const auto& branch : measure_branches(state, axis, qubit)) {
    if (!branch.post_state) {
      continue;
    }
    signs[static_cast<std::size_t>(qubit)] = branch.outcome > 0 ? 1 : 0;
    walk_plan(*branch.post_state, prob * branch.probability, plan, step + 1,
              signs, dist);
  }
}

JointDistribution joint_distribution(
    const PureState& state,
    const std::vector<std::pair<int, MeasurementAxis>>& plan) {
  JointDistribution dist;
  std::vector<int> signs(static_cast<std::size_t>(state.n_qubits()), 0);
  walk_plan(state, 1.0, plan, 0, signs, dist);
  return dist;
}

void check_same_distribution(const JointDistribution& a,
                             const JointDistribution& b) {
  JointDistribution merged = a;
  for (const auto& [key, value] : b) {
    merged.try_emplace(key, 0.0);
  }
  for (const auto& [key, unused] : merged) {
    const auto ia = a.find(key);
    const auto ib = b.find(key);
    const double pa = ia == a.end() ? 0.0 : ia->second;
    const double pb = ib == b.end() ? 0.0 : ib->second;
    CHECK(std::abs(pa - pb) <= 1e-12);
  }
}

const EquationCheck& find_check(const EquationAuditReport& report,
                                const std::string& id) {
  for (const auto& check : report.checks) {
    if (check.id == id) {
      return check;
    }
  }
  REQUIRE_MESSAGE(false, "missing audit id: " << id);
  return report.checks.front();
}

}  // namespace

TEST_CASE("ProtocolConfig validates splits, bits and the qubit budget") {
  CHECK_NOTHROW(ProtocolConfig{}.validate());
  ProtocolConfig config;

  config = ProtocolConfig{};
  config.k_x = 3;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ProtocolConfig{};
  config.k_x = -1;
  config.k_z = 5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ProtocolConfig{};
  config.n_total = 0;
  config.k_x = 0;
  config.k_z = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ProtocolConfig{};
  config.bob_bit = 2;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = ProtocolConfig{};
  config.n_total = 13;
  config.k_x = 6;
  config.k_z = 7;
  CHECK_THROWS_AS(config.validate(), ResourceError);
  try {
    config.validate();
  } catch (const ResourceError& error) {
    CHECK(std::string(error.what()).find("12") != std::string::npos);
  }
  CHECK_NOTHROW(config.validate(20));
}

TEST_CASE("DecisionRule accepts thresholds strictly inside (0, 1/2)") {
  CHECK_NOTHROW(DecisionRule{});
  CHECK(DecisionRule{}.threshold == 0.25);
  CHECK_NOTHROW(DecisionRule{0.49});
  CHECK_THROWS_AS(DecisionRule{0.0}, std::invalid_argument);
  CHECK_THROWS_AS(DecisionRule{0.5}, std::invalid_argument);
  CHECK_THROWS_AS(DecisionRule{-0.1}, std::invalid_argument);
}

TEST_CASE("Decision names") {
  CHECK(to_string(Decision::Zero) == "0");
  CHECK(to_string(Decision::One) == "1");
  CHECK(to_string(Decision::Indeterminate) == "indeterminate");
}

TEST_CASE("bob_encode_branches steers Alice to the opposite eigenstate") {
  SUBCASE("z basis") {
    const auto branches = bob_encode_branches(0);
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].bob.outcome == 0.5);
    CHECK(branches[1].bob.outcome == -0.5);
    for (const auto& branch : branches) {
      CHECK(std::abs(branch.bob.probability - 0.5) <= 1e-12);
      CHECK(branch.alice_state.n_qubits() == 1);
    }
    CHECK(fidelity(branches[0].alice_state, basis_state({1})) >= 1.0 - 1e-12);
    CHECK(fidelity(branches[1].alice_state, basis_state({0})) >= 1.0 - 1e-12);
  }
  SUBCASE("x basis") {
    const auto branches = bob_encode_branches(1);
    REQUIRE(branches.size() == 2);
    CHECK(fidelity(branches[0].alice_state, x_eigenstate(Sign::Minus)) >=
          1.0 - 1e-12);
    CHECK(fidelity(branches[1].alice_state, x_eigenstate(Sign::Plus)) >=
          1.0 - 1e-12);
  }
  SUBCASE("invalid bit") {
    CHECK_THROWS_AS(bob_encode_branches(2), std::invalid_argument);
    CHECK_THROWS_AS(bob_encode_branches(-1), std::invalid_argument);
  }
}

TEST_CASE("alice_amplify reproduces the closed-form cascade states") {
  SUBCASE("z eigenstates stay product states") {
    CHECK(max_abs_diff(alice_amplify(basis_state({0}), 3),
                       basis_state({0, 0, 0})) <= 1e-15);
    CHECK(max_abs_diff(alice_amplify(basis_state({1}), 3),
                       basis_state({1, 1, 1})) <= 1e-15);
  }
  SUBCASE("|+x> entangles into Phi+ then GHZ") {
    CHECK(max_abs_diff(alice_amplify(x_eigenstate(Sign::Plus), 2),
                       bell_state(BellKind::PhiPlus)) <= 1e-15);
    CHECK(max_abs_diff(alice_amplify(x_eigenstate(Sign::Plus), 3),
                       ghz_state(3)) <= 1e-15);
  }
  SUBCASE("|-x> lands on Phi- up to a global sign") {
    const PureState amplified = alice_amplify(x_eigenstate(Sign::Minus), 2);
    lin::CVector expected(4);
    expected << -kInvSqrt2, 0.0, 0.0, kInvSqrt2;
    CHECK((amplified.amplitudes() - expected).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(std::abs(fidelity(amplified, bell_state(BellKind::PhiMinus)) - 1.0) <=
          1e-12);
  }
  SUBCASE("n_total of one is the identity") {
    const PureState psi = x_eigenstate(Sign::Minus);
    CHECK(max_abs_diff(alice_amplify(psi, 1), psi) == 0.0);
  }
  SUBCASE("argument and budget validation") {
    CHECK_THROWS_AS(alice_amplify(basis_state({0, 0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(alice_amplify(basis_state({0}), 0), std::invalid_argument);
    CHECK_THROWS_AS(alice_amplify(basis_state({0}), 13), ResourceError);
    CHECK_THROWS_AS(alice_amplify(basis_state({0}), 5, 4), ResourceError);
    CHECK_NOTHROW(alice_amplify(basis_state({0}), 13, 16));
  }
}

TEST_CASE("the amplified state does not depend on the control choices") {
  // Every admissible control sequence for growing 1 -> 4 qubits.
  std::vector<std::vector<int>> sequences;
  for (int c1 = 0; c1 < 1; ++c1) {
    for (int c2 = 0; c2 < 2; ++c2) {
      for (int c3 = 0; c3 < 3; ++c3) {
        sequences.push_back({c1, c2, c3});
      }
    }
  }
  REQUIRE(sequences.size() == 6);

  const std::vector<PureState> seeds = {
      basis_state({0}), basis_state({1}), x_eigenstate(Sign::Plus),
      x_eigenstate(Sign::Minus)};
  for (const PureState& seed : seeds) {
    const PureState reference = alice_amplify(seed, 4);
    for (const auto& controls : sequences) {
      CHECK(max_abs_diff(alice_amplify_with_controls(seed, 4, controls),
                         reference) <= 1e-12);
    }
  }

  CHECK_THROWS_AS(alice_amplify_with_controls(basis_state({0}), 3, {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(alice_amplify_with_controls(basis_state({0}), 3, {0, 2}),
                  std::invalid_argument);
}

TEST_CASE("GHZ branches give all-equal z outcomes") {
  PureState state = alice_amplify(x_eigenstate(Sign::Plus), 4);
  for (const auto& first : measure_branches(state, MeasurementAxis::z(), 0)) {
    CHECK(std::abs(first.probability - 0.5) <= 1e-12);
    REQUIRE(first.post_state.has_value());
    PureState post = *first.post_state;
    for (int qubit = 1; qubit < 4; ++qubit) {
      const auto branches = measure_branches(post, MeasurementAxis::z(), qubit);
      const int same = first.outcome > 0 ? 0 : 1;
      CHECK(branches[static_cast<std::size_t>(same)].probability >= 1.0 - 1e-12);
      CHECK(branches[static_cast<std::size_t>(1 - same)].probability <= 1e-12);
      REQUIRE(branches[static_cast<std::size_t>(same)].post_state.has_value());
      post = *branches[static_cast<std::size_t>(same)].post_state;
    }
  }
}

TEST_CASE("alice_measure_plan splits the register x-first") {
  RandomStream rng(5);
  const PureState zeros = basis_state({0, 0, 0, 0});
  for (int i = 0; i < 50; ++i) {
    const MeasurePlanResult plan = alice_measure_plan(zeros, 2, 2, rng);
    CHECK(plan.x_outcomes.size() == 2);
    CHECK(plan.z_outcomes.size() == 2);
    CHECK(plan.mean_sz == 0.5);
    const bool known = plan.mean_sx == 0.5 || plan.mean_sx == 0.0 ||
                       plan.mean_sx == -0.5;
    CHECK(known);
    for (double outcome : plan.z_outcomes) {
      CHECK(outcome == 0.5);
    }
  }

  const MeasurePlanResult all_x = alice_measure_plan(zeros, 4, 0, rng);
  CHECK(all_x.z_outcomes.empty());
  CHECK(all_x.mean_sz == 0.0);

  CHECK_THROWS_AS(alice_measure_plan(zeros, 3, 2, rng), std::invalid_argument);
  CHECK_THROWS_AS(alice_measure_plan(zeros, -1, 5, rng), std::invalid_argument);
}

TEST_CASE("measurement order does not change the joint distribution") {
  const MeasurementAxis x = MeasurementAxis::x();
  const MeasurementAxis z = MeasurementAxis::z();
  const std::vector<std::pair<int, MeasurementAxis>> x_first = {
      {0, x}, {1, x}, {2, z}, {3, z}};
  const std::vector<std::pair<int, MeasurementAxis>> reversed = {
      {3, z}, {2, z}, {1, x}, {0, x}};
  const std::vector<std::pair<int, MeasurementAxis>> interleaved = {
      {2, z}, {0, x}, {3, z}, {1, x}};

  const std::vector<PureState> states = {
      alice_amplify(x_eigenstate(Sign::Plus), 4),
      alice_amplify(basis_state({1}), 4),
      alice_amplify(x_eigenstate(Sign::Minus), 4)};
  for (const PureState& state : states) {
    const JointDistribution reference = joint_distribution(state, x_first);
    check_same_distribution(reference, joint_distribution(state, reversed));
    check_same_distribution(reference, joint_distribution(state, interleaved));
  }
}

TEST_CASE("alice_decide thresholds the z average") {
  const DecisionRule rule{};
  CHECK(alice_decide(0.0, 0.5, rule) == Decision::Zero);
  CHECK(alice_decide(0.0, -0.5, rule) == Decision::Zero);
  CHECK(alice_decide(0.5, 0.0, rule) == Decision::One);
  CHECK(alice_decide(0.0, 0.1, rule) == Decision::One);
  CHECK(alice_decide(0.0, 0.25, rule) == Decision::Indeterminate);
  CHECK(alice_decide(0.0, -0.25, rule) == Decision::Indeterminate);
  CHECK(alice_decide(0.0, 0.3, DecisionRule{0.2}) == Decision::Zero);
}

TEST_CASE("run_single_trial is deterministic in the seed") {
  ProtocolConfig config;
  config.seed = 99;
  config.bob_bit = 1;
  const RunRecord a = run_single_trial(config);
  const RunRecord b = run_single_trial(config);
  CHECK(a.bob_bit == b.bob_bit);
  CHECK(a.bob_outcome == b.bob_outcome);
  CHECK(a.alice_x_outcomes == b.alice_x_outcomes);
  CHECK(a.alice_z_outcomes == b.alice_z_outcomes);
  CHECK(a.mean_sx == b.mean_sx);
  CHECK(a.mean_sz == b.mean_sz);
  CHECK(a.decoded == b.decoded);
  CHECK((a.bob_axis.direction - b.bob_axis.direction).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("the decoded bit is 0 regardless of what Bob sent") {
  for (int bob_bit : {0, 1}) {
    int plus_outcomes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      ProtocolConfig config;
      config.bob_bit = bob_bit;
      config.seed = seed;
      const RunRecord record = run_single_trial(config);
      CHECK(record.bob_bit == bob_bit);
      CHECK(record.alice_x_outcomes.size() == 2);
      CHECK(record.alice_z_outcomes.size() == 2);
      CHECK(std::abs(std::abs(record.mean_sz) - 0.5) <= 1e-12);
      CHECK(record.decoded == Decision::Zero);
      if (record.bob_outcome > 0) {
        ++plus_outcomes;
      }
    }
    CHECK(plus_outcomes > 60);
    CHECK(plus_outcomes < 140);
  }

  ProtocolConfig bad;
  bad.k_z = 3;
  CHECK_THROWS_AS(run_single_trial(bad), std::invalid_argument);
}

TEST_CASE("audit_equations re-derives every displayed identity") {
  const EquationAuditReport report = audit_equations();
  const std::vector<std::string> expected_ids = {
      "singlet-vector",
      "z-basis",
      "cnot-matrix",
      "clone-plus-z",
      "clone-minus-z",
      "plus-x-decomposition",
      "entangling-clone-plus-x",
      "bell-reduced-states",
      "unpolarized-clone-separable",
      "minus-x-decomposition",
      "entangling-clone-minus-x",
  };
  REQUIRE(report.checks.size() == expected_ids.size());
  for (std::size_t i = 0; i < expected_ids.size(); ++i) {
    CHECK(report.checks[i].id == expected_ids[i]);
    CHECK(report.checks[i].pass);
    CHECK(report.checks[i].deviation <= 1e-12);
  }
  CHECK(report.all_pass());
}

TEST_CASE("audit_equations flags a perturbed interaction matrix") {
  lin::CMatrix warped = cnot().matrix();
  warped(3, 0) += 1e-6;
  const EquationAuditReport report = audit_equations(warped);
  CHECK_FALSE(report.all_pass());
  const EquationCheck& broken = find_check(report, "clone-plus-z");
  CHECK_FALSE(broken.pass);
  CHECK(broken.deviation >= 1e-7);
  CHECK(find_check(report, "singlet-vector").pass);
  CHECK(find_check(report, "z-basis").pass);

  CHECK_THROWS_AS(audit_equations(lin::CMatrix::Identity(3, 3)),
                  std::invalid_argument);
}
