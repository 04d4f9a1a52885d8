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

#include "qansible/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/math/distributions/chi_squared.hpp>

namespace qansible {

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

/// Distribution of the mean of k independent fair +-1/2 spins. The masses
/// C(k, j) / 2^k are dyadic, hence exact in double precision for k <= 12.
std::vector<std::pair<Rational, double>> fair_mean_table(int k) {
  std::vector<std::pair<Rational, double>> table;
  table.reserve(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    table.emplace_back(mean_from_counts(j, k),
                       std::ldexp(static_cast<double>(choose(k, j)), -k));
  }
  return table;
}

OutcomeDistribution from_map(const std::map<MeanPair, double>& acc) {
  OutcomeDistribution dist;
  dist.entries.reserve(acc.size());
  for (const auto& [statistic, probability] : acc) {
    dist.entries.push_back({statistic, probability});
  }
  return dist;
}

MeanPair statistic_from_outcomes(const std::vector<double>& x_outcomes,
                                 const std::vector<double>& z_outcomes) {
  const auto ups = [](const std::vector<double>& outcomes) {
    return static_cast<int>(
        std::count_if(outcomes.begin(), outcomes.end(),
                      [](double outcome) { return outcome > 0.0; }));
  };
  return MeanPair{
      mean_from_counts(ups(x_outcomes), static_cast<int>(x_outcomes.size())),
      mean_from_counts(ups(z_outcomes), static_cast<int>(z_outcomes.size()))};
}

void check_decision_distribution(const DecisionDistribution& dist,
                                 const char* name) {
  double total = 0.0;
  for (double p : dist) {
    if (!(p >= 0.0)) {
      std::ostringstream msg;
      msg << "channel_mutual_information: " << name
          << " has a negative probability " << p;
      throw std::invalid_argument(msg.str());
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "channel_mutual_information: " << name << " sums to " << total;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

Rational mean_from_counts(int ups, int k) {
  if (k < 0 || ups < 0 || ups > k) {
    throw std::invalid_argument("mean_from_counts: need 0 <= ups <= k");
  }
  if (k == 0) {
    return Rational(0);
  }
  return Rational(2 * ups - k, 2 * k);
}

double OutcomeDistribution::total_probability() const {
  double total = 0.0;
  for (const auto& entry : entries) {
    total += entry.probability;
  }
  return total;
}

double OutcomeDistribution::probability_of(const MeanPair& statistic) const {
  for (const auto& entry : entries) {
    if (entry.statistic == statistic) {
      return entry.probability;
    }
  }
  return 0.0;
}

OutcomeDistribution enumerate_alice_distribution(int bob_bit, int n_total,
                                                 int k_x, int k_z,
                                                 ModelKind model, int budget) {
  ProtocolConfig{n_total, k_x, k_z, bob_bit, 0}.validate(budget);

  std::map<MeanPair, double> acc;
  if (model == ModelKind::PaperIndependentMixture) {
    const auto x_table = fair_mean_table(k_x);
    if (bob_bit == 1) {
      const auto z_table = fair_mean_table(k_z);
      for (const auto& [mx, px] : x_table) {
        for (const auto& [mz, pz] : z_table) {
          acc[MeanPair{mx, mz}] += px * pz;
        }
      }
    } else {
      // Per Bob branch the model is the product state |+z>^k or |-z>^k, so
      // the z mean is pinned at +-1/2 while the x outcomes stay fair coins.
      const std::vector<std::pair<Rational, double>> z_table =
          k_z == 0 ? std::vector<std::pair<Rational, double>>{{Rational(0), 1.0}}
                   : std::vector<std::pair<Rational, double>>{
                         {Rational(1, 2), 0.5}, {Rational(-1, 2), 0.5}};
      for (const auto& [mx, px] : x_table) {
        for (const auto& [mz, pz] : z_table) {
          acc[MeanPair{mx, mz}] += px * pz;
        }
      }
    }
    return from_map(acc);
  }

  std::function<void(const PureState&, int, double, int, int)> walk =
      [&](const PureState& state, int next_qubit, double path_probability,
          int x_ups, int z_ups) {
        if (next_qubit == n_total) {
          acc[MeanPair{mean_from_counts(x_ups, k_x),
                       mean_from_counts(z_ups, k_z)}] += path_probability;
          return;
        }
        const MeasurementAxis axis =
            next_qubit < k_x ? MeasurementAxis::x() : MeasurementAxis::z();
        for (const MeasurementBranch& branch :
             measure_branches(state, axis, next_qubit)) {
          if (!branch.post_state) {
            continue;
          }
          const bool up = branch.outcome > 0.0;
          walk(*branch.post_state, next_qubit + 1,
               path_probability * branch.probability,
               x_ups + (next_qubit < k_x && up ? 1 : 0),
               z_ups + (next_qubit >= k_x && up ? 1 : 0));
        }
      };

  for (const BobBranch& branch : bob_encode_branches(bob_bit)) {
    const PureState amplified = alice_amplify(branch.alice_state, n_total, budget);
    walk(amplified, 0, branch.bob.probability, 0, 0);
  }
  return from_map(acc);
}

double total_variation(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  std::map<MeanPair, double> difference;
  for (const auto& entry : p.entries) {
    difference[entry.statistic] += entry.probability;
  }
  for (const auto& entry : q.entries) {
    difference[entry.statistic] -= entry.probability;
  }
  double total = 0.0;
  for (const auto& [statistic, delta] : difference) {
    total += std::abs(delta);
  }
  return 0.5 * total;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const auto eigenvalues = lin::hermitian_eigenvalues(a.matrix() - b.matrix());
  double total = 0.0;
  for (double value : eigenvalues) {
    total += std::abs(value);
  }
  return 0.5 * total;
}

NoSignalingReport no_signaling_check(int n_total, int k_x, int k_z) {
  NoSignalingReport report;
  report.tvd_true = total_variation(
      enumerate_alice_distribution(0, n_total, k_x, k_z, ModelKind::TrueDynamics),
      enumerate_alice_distribution(1, n_total, k_x, k_z, ModelKind::TrueDynamics));

  const lin::CMatrix half_identity = 0.5 * lin::CMatrix::Identity(2, 2);
  lin::CMatrix averaged[2];
  double deviations[2];
  for (int bob_bit : {0, 1}) {
    lin::CMatrix rho = lin::CMatrix::Zero(2, 2);
    for (const BobBranch& branch : bob_encode_branches(bob_bit)) {
      const lin::CVector& amps = branch.alice_state.amplitudes();
      rho += branch.bob.probability * (amps * amps.adjoint());
    }
    averaged[bob_bit] = rho;
    deviations[bob_bit] = (rho - half_identity).cwiseAbs().maxCoeff();
  }
  report.alice_reduced_deviation_z = deviations[0];
  report.alice_reduced_deviation_x = deviations[1];
  report.trace_distance_reduced = trace_distance(DensityMatrix(1, averaged[0]),
                                                 DensityMatrix(1, averaged[1]));
  return report;
}

DecisionDistribution decision_distribution(const OutcomeDistribution& dist,
                                           const DecisionRule& rule) {
  DecisionDistribution out{0.0, 0.0, 0.0};
  for (const auto& entry : dist.entries) {
    const Decision decision =
        alice_decide(to_double(entry.statistic.mean_sx),
                     to_double(entry.statistic.mean_sz), rule);
    out[decision_index(decision)] += entry.probability;
  }
  return out;
}

double channel_mutual_information(const DecisionDistribution& given_zero,
                                  const DecisionDistribution& given_one) {
  check_decision_distribution(given_zero, "conditional given bit 0");
  check_decision_distribution(given_one, "conditional given bit 1");

  double information = 0.0;
  for (std::size_t j = 0; j < given_zero.size(); ++j) {
    const double marginal = 0.5 * (given_zero[j] + given_one[j]);
    for (const DecisionDistribution* conditional : {&given_zero, &given_one}) {
      const double p = (*conditional)[j];
      if (p > 0.0) {
        information += 0.5 * p * std::log2(p / marginal);
      }
    }
  }
  return std::max(information, 0.0);
}

MonteCarloResult monte_carlo_distribution(const ProtocolConfig& config,
                                          std::uint64_t trials) {
  if (trials == 0) {
    throw std::invalid_argument("monte_carlo_distribution: trials must be at least 1");
  }
  config.validate();

  // Only Bob's branch choice and the sweep draws vary per trial, so the two
  // possible amplified registers are built once. Trial t replays
  // run_single_trial with seed derive_seed(config.seed, t) exactly.
  const auto branches = bob_encode_branches(config.bob_bit);
  const PureState amplified_plus =
      alice_amplify(branches[0].alice_state, config.n_total);
  const PureState amplified_minus =
      alice_amplify(branches[1].alice_state, config.n_total);

  std::map<MeanPair, std::uint64_t> counts;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomStream rng(derive_seed(config.seed, t));
    const double u = rng.uniform();
    const PureState& amplified =
        u < branches[0].bob.probability ? amplified_plus : amplified_minus;
    const MeasurePlanResult plan =
        alice_measure_plan(amplified, config.k_x, config.k_z, rng);
    counts[statistic_from_outcomes(plan.x_outcomes, plan.z_outcomes)] += 1;
  }

  MonteCarloResult result;
  result.trials = trials;
  result.distribution.entries.reserve(counts.size());
  for (const auto& [statistic, count] : counts) {
    result.distribution.entries.push_back(
        {statistic, static_cast<double>(count) / static_cast<double>(trials)});
  }

  const OutcomeDistribution exact = enumerate_alice_distribution(
      config.bob_bit, config.n_total, config.k_x, config.k_z,
      ModelKind::TrueDynamics);

  double chi_square = 0.0;
  int bins = 0;
  double pooled_expected = 0.0;
  std::uint64_t pooled_observed = 0;
  std::uint64_t accounted = 0;
  for (const auto& entry : exact.entries) {
    const double expected = entry.probability * static_cast<double>(trials);
    const auto it = counts.find(entry.statistic);
    const std::uint64_t observed = it == counts.end() ? 0 : it->second;
    accounted += observed;
    if (expected < 5.0) {
      pooled_expected += expected;
      pooled_observed += observed;
    } else {
      const double delta = static_cast<double>(observed) - expected;
      chi_square += delta * delta / expected;
      ++bins;
    }
  }
  if (accounted != trials) {
    throw std::logic_error(
        "monte_carlo_distribution: observed an outcome outside the exact support");
  }
  if (pooled_expected > 0.0) {
    const double delta = static_cast<double>(pooled_observed) - pooled_expected;
    chi_square += delta * delta / pooled_expected;
    ++bins;
  }

  result.chi_square = chi_square;
  result.degrees_of_freedom = bins - 1;
  if (result.degrees_of_freedom >= 1) {
    const boost::math::chi_squared fit(result.degrees_of_freedom);
    result.p_value = boost::math::cdf(boost::math::complement(fit, chi_square));
  } else {
    result.p_value = 1.0;
  }
  return result;
}

ChannelReport paper_gap_report(int n_total, int k_x, int k_z,
                               const DecisionRule& rule) {
  const OutcomeDistribution true_given_zero = enumerate_alice_distribution(
      0, n_total, k_x, k_z, ModelKind::TrueDynamics);
  const OutcomeDistribution true_given_one = enumerate_alice_distribution(
      1, n_total, k_x, k_z, ModelKind::TrueDynamics);
  const OutcomeDistribution paper_given_zero = enumerate_alice_distribution(
      0, n_total, k_x, k_z, ModelKind::PaperIndependentMixture);
  const OutcomeDistribution paper_given_one = enumerate_alice_distribution(
      1, n_total, k_x, k_z, ModelKind::PaperIndependentMixture);

  ChannelReport report;
  report.tvd_true = total_variation(true_given_zero, true_given_one);
  report.tvd_paper_gap = total_variation(true_given_one, paper_given_one);
  report.mutual_information_true =
      channel_mutual_information(decision_distribution(true_given_zero, rule),
                                 decision_distribution(true_given_one, rule));
  report.mutual_information_paper_model =
      channel_mutual_information(decision_distribution(paper_given_zero, rule),
                                 decision_distribution(paper_given_one, rule));

  const Eigen::Index dim = Eigen::Index{1} << n_total;
  const DensityMatrix uniform(
      n_total, lin::CMatrix::Identity(dim, dim) / static_cast<double>(dim));
  report.trace_distance_states = trace_distance(to_density(ghz_state(n_total)), uniform);
  return report;
}

}  // namespace qansible
