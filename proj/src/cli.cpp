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

#include "qansible/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifndef QANSIBLE_VERSION
#define QANSIBLE_VERSION "0.0.0"
#endif

namespace qansible::cli {

namespace {

using nlohmann::ordered_json;

/// Shortest decimal text that round-trips the double, for CSV cells.
std::string format_double(double value) { return nlohmann::json(value).dump(); }

std::string model_name(ModelKind model) {
  return model == ModelKind::TrueDynamics ? "true_dynamics"
                                          : "paper_independent_mixture";
}

void validate(const CliConfig& config) {
  if (config.format != "json" && config.format != "csv") {
    throw std::invalid_argument("format must be json or csv, got " + config.format);
  }
  DecisionRule{config.threshold};
  if (config.command != Command::Audit) {
    ProtocolConfig{config.n_total, config.k_x, config.k_z,
                   config.command == Command::Simulate ? config.bob_bit : 0,
                   config.seed}
        .validate();
  }
  if (config.command == Command::Simulate && config.trials < 1) {
    throw std::invalid_argument("simulate requires trials >= 1");
  }
}

std::string distribution_csv_rows(const OutcomeDistribution& dist,
                                  const std::string& prefix) {
  std::string rows;
  for (const auto& entry : dist.entries) {
    rows += prefix + format_double(to_double(entry.statistic.mean_sx)) + "," +
            format_double(to_double(entry.statistic.mean_sz)) + "," +
            format_double(entry.probability) + "\n";
  }
  return rows;
}

struct CommandOutput {
  ordered_json result;
  std::string csv;
  int exit_code = kExitSuccess;
};

CommandOutput run_audit() {
  const EquationAuditReport report = audit_equations();
  CommandOutput output;
  output.result = audit_payload(report);
  output.csv = "id,deviation,pass\n";
  for (const auto& check : report.checks) {
    output.csv += check.id + "," + format_double(check.deviation) + "," +
                  (check.pass ? "true" : "false") + "\n";
  }
  if (!report.all_pass()) {
    output.exit_code = kExitAuditFailure;
  }
  return output;
}

CommandOutput run_enumerate(const CliConfig& config) {
  CommandOutput output;
  ordered_json tables = ordered_json::array();
  output.csv = "model,bob_bit,mean_sx,mean_sz,prob\n";
  for (ModelKind model :
       {ModelKind::TrueDynamics, ModelKind::PaperIndependentMixture}) {
    for (int bob_bit : {0, 1}) {
      const OutcomeDistribution dist = enumerate_alice_distribution(
          bob_bit, config.n_total, config.k_x, config.k_z, model);
      tables.push_back(ordered_json{{"model", model_name(model)},
                                    {"bob_bit", bob_bit},
                                    {"distribution", distribution_payload(dist)}});
      output.csv += distribution_csv_rows(
          dist, model_name(model) + "," + std::to_string(bob_bit) + ",");
    }
  }
  output.result = ordered_json{{"tables", std::move(tables)}};
  return output;
}

CommandOutput run_simulate(const CliConfig& config) {
  const MonteCarloResult mc = monte_carlo_distribution(
      ProtocolConfig{config.n_total, config.k_x, config.k_z, config.bob_bit,
                     config.seed},
      config.trials);
  CommandOutput output;
  output.result = ordered_json{{"distribution", distribution_payload(mc.distribution)},
                               {"chi_square", mc.chi_square},
                               {"degrees_of_freedom", mc.degrees_of_freedom},
                               {"p_value", mc.p_value},
                               {"trials", mc.trials}};
  output.csv = "mean_sx,mean_sz,prob\n" + distribution_csv_rows(mc.distribution, "");
  return output;
}

CommandOutput run_compare(const CliConfig& config) {
  const ChannelReport report =
      paper_gap_report(config.n_total, config.k_x, config.k_z,
                       DecisionRule{config.threshold});
  CommandOutput output;
  output.result = ordered_json{{"channel", channel_payload(report)}};
  output.csv =
      "tvd_true,tvd_paper_gap,mi_true,mi_paper_model,trace_distance_states\n" +
      format_double(report.tvd_true) + "," + format_double(report.tvd_paper_gap) +
      "," + format_double(report.mutual_information_true) + "," +
      format_double(report.mutual_information_paper_model) + "," +
      format_double(report.trace_distance_states) + "\n";
  return output;
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::Audit:
      return "audit";
    case Command::Enumerate:
      return "enumerate";
    case Command::Simulate:
      return "simulate";
    case Command::Compare:
      return "compare";
  }
  throw std::logic_error("to_string: unknown Command value");
}

Command command_from_string(const std::string& name) {
  if (name == "audit") {
    return Command::Audit;
  }
  if (name == "enumerate") {
    return Command::Enumerate;
  }
  if (name == "simulate") {
    return Command::Simulate;
  }
  if (name == "compare") {
    return Command::Compare;
  }
  throw std::invalid_argument("unknown command: " + name);
}

ordered_json config_json(const CliConfig& config) {
  return ordered_json{{"n_total", config.n_total},
                      {"k_x", config.k_x},
                      {"k_z", config.k_z},
                      {"bob_bit", config.bob_bit},
                      {"trials", config.trials},
                      {"seed", config.seed},
                      {"threshold", config.threshold},
                      {"format", config.format},
                      {"out", config.output_path}};
}

CliConfig config_from_envelope(const ordered_json& envelope) {
  CliConfig config;
  config.command = command_from_string(envelope.at("command").get<std::string>());
  const ordered_json& j = envelope.at("config");
  config.n_total = j.at("n_total").get<int>();
  config.k_x = j.at("k_x").get<int>();
  config.k_z = j.at("k_z").get<int>();
  config.bob_bit = j.at("bob_bit").get<int>();
  config.trials = j.at("trials").get<std::uint64_t>();
  config.seed = j.at("seed").get<std::uint64_t>();
  config.threshold = j.at("threshold").get<double>();
  config.format = j.at("format").get<std::string>();
  config.output_path = j.at("out").get<std::string>();
  return config;
}

ordered_json audit_payload(const EquationAuditReport& report) {
  ordered_json equations = ordered_json::array();
  for (const auto& check : report.checks) {
    equations.push_back(ordered_json{
        {"id", check.id}, {"deviation", check.deviation}, {"pass", check.pass}});
  }
  return ordered_json{{"equations", std::move(equations)}};
}

ordered_json distribution_payload(const OutcomeDistribution& dist) {
  ordered_json rows = ordered_json::array();
  for (const auto& entry : dist.entries) {
    rows.push_back(ordered_json{{"mean_sx", to_double(entry.statistic.mean_sx)},
                                {"mean_sz", to_double(entry.statistic.mean_sz)},
                                {"prob", entry.probability}});
  }
  return rows;
}

ordered_json channel_payload(const ChannelReport& report) {
  return ordered_json{{"tvd_true", report.tvd_true},
                      {"tvd_paper_gap", report.tvd_paper_gap},
                      {"mi_true", report.mutual_information_true},
                      {"mi_paper_model", report.mutual_information_paper_model},
                      {"trace_distance_states", report.trace_distance_states}};
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandOutput output;
  switch (config.command) {
    case Command::Audit:
      output = run_audit();
      break;
    case Command::Enumerate:
      output = run_enumerate(config);
      break;
    case Command::Simulate:
      output = run_simulate(config);
      break;
    case Command::Compare:
      output = run_compare(config);
      break;
  }
  const double duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::string text;
  if (config.format == "csv") {
    text = output.csv;
  } else {
    ordered_json envelope;
    envelope["version"] = QANSIBLE_VERSION;
    envelope["command"] = to_string(config.command);
    envelope["config"] = config_json(config);
    envelope["duration_seconds"] = duration_seconds;
    envelope["result"] = std::move(output.result);
    text = envelope.dump(2) + "\n";
  }

  if (config.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output_path);
    if (!file) {
      err << "error: cannot open output file " << config.output_path << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return output.exit_code;
}

}  // namespace qansible::cli
