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

/// \file analysis.hpp
/// Exact and statistical evaluation of the signalling claim: enumerate
/// Alice's conditional outcome distributions, compare the true dynamics
/// against the independent-mixture model the protocol assumes, and compute
/// trace distance, total variation distance and channel mutual information.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "qansible/protocol.hpp"
#include "qansible/quantum.hpp"

namespace qansible {

/// Exact value of a spin-average statistic. Means over a sub-ensemble of
/// size k live on the grid (2j - k) / (2k), so rational keys avoid
/// float-keyed table collisions.
using Rational = boost::rational<std::int64_t>;

double to_double(const Rational& r);

/// Pair of sub-ensemble averages identifying one outcome of a full sweep.
struct MeanPair {
  Rational mean_sx{0};
  Rational mean_sz{0};

  friend bool operator==(const MeanPair& a, const MeanPair& b) {
    return a.mean_sx == b.mean_sx && a.mean_sz == b.mean_sz;
  }
  friend bool operator<(const MeanPair& a, const MeanPair& b) {
    if (a.mean_sx != b.mean_sx) {
      return a.mean_sx < b.mean_sx;
    }
    return a.mean_sz < b.mean_sz;
  }
};

/// The exact mean (2*ups - k) / (2k) of k spin outcomes of which `ups`
/// came out +1/2; defined as 0 for an empty sub-ensemble.
Rational mean_from_counts(int ups, int k);

struct WeightedOutcome {
  MeanPair statistic;
  double probability;
};

/// Probability table over distinct statistic values, sorted by statistic.
struct OutcomeDistribution {
  std::vector<WeightedOutcome> entries;

  double total_probability() const;
  /// Probability of a statistic, 0 when absent from the support.
  double probability_of(const MeanPair& statistic) const;
};

/// Which dynamics generates Alice's outcomes.
enum class ModelKind {
  /// Full state-vector evolution of the amplified register.
  TrueDynamics,
  /// Every Alice qubit sampled i.i.d. from the single-particle state the
  /// protocol derivation assigns it: product |+z>/|-z> given Bob's z
  /// measurement, the maximally mixed qubit given Bob's x measurement.
  PaperIndependentMixture,
};

/// Metrics comparing the two conditional channels and the two models.
struct ChannelReport {
  /// TVD between Alice's true outcome tables given Bob-z vs Bob-x.
  double tvd_true = 0.0;
  /// TVD between the true Bob-x table and the independent-mixture table.
  double tvd_paper_gap = 0.0;
  double mutual_information_true = 0.0;         ///< bits
  double mutual_information_paper_model = 0.0;  ///< bits
  /// Trace distance between the amplified Bob-x state and the uniform
  /// mixture the independent-mixture model asserts.
  double trace_distance_states = 0.0;
};

/// Exact no-signalling diagnostics for one configuration.
struct NoSignalingReport {
  double tvd_true = 0.0;
  /// Largest entrywise deviation of Alice's outcome-averaged pre-cascade
  /// state from (1/2)I, given Bob measured z / x.
  double alice_reduced_deviation_z = 0.0;
  double alice_reduced_deviation_x = 0.0;
  /// Trace distance between those two averaged states.
  double trace_distance_reduced = 0.0;
};

/// Probabilities of the three decisions, indexed by decision_index().
using DecisionDistribution = std::array<double, 3>;

constexpr std::size_t decision_index(Decision d) {
  return static_cast<std::size_t>(d);
}

/// Empirical table plus its goodness of fit against exact enumeration.
struct MonteCarloResult {
  OutcomeDistribution distribution;
  double chi_square = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
  std::uint64_t trials = 0;
};

/// Exact distribution of (mean_sx, mean_sz) for Alice's sweep, marginalised
/// over Bob's two equiprobable outcomes.
OutcomeDistribution enumerate_alice_distribution(int bob_bit, int n_total,
                                                 int k_x, int k_z,
                                                 ModelKind model,
                                                 int budget = kDefaultQubitBudget);

/// (1/2) sum |p - q| over the union support; missing mass counts as 0.
double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// (1/2) sum |eigenvalues of a - b|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Verifies the no-signalling condition exactly: identical outcome tables
/// under both of Bob's bases, and a maximally mixed pre-cascade qubit for
/// Alice either way.
NoSignalingReport no_signaling_check(int n_total, int k_x, int k_z);

/// Pushes an outcome table through the threshold rule.
DecisionDistribution decision_distribution(const OutcomeDistribution& dist,
                                           const DecisionRule& rule);

/// I(Bob bit; Alice decision) in bits under a uniform prior on the bit.
double channel_mutual_information(const DecisionDistribution& given_zero,
                                  const DecisionDistribution& given_one);

/// Runs seeded trials (trial t uses derive_seed(config.seed, t)) and fits
/// the empirical table against the exact enumeration. Bins with expected
/// count below 5 are pooled before the chi-square statistic is formed.
MonteCarloResult monte_carlo_distribution(const ProtocolConfig& config,
                                          std::uint64_t trials);

/// The full verdict for one configuration: both TVDs, both mutual
/// informations and the state-level trace distance.
ChannelReport paper_gap_report(int n_total, int k_x, int k_z,
                               const DecisionRule& rule = DecisionRule{});

}  // namespace qansible
