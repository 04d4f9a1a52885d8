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

#include <iostream>

#include <CLI11.hpp>

#include "qansible/cli.hpp"

int main(int argc, char** argv) {
  using qansible::cli::CliConfig;
  using qansible::cli::Command;

  CliConfig config;
  CLI::App app{"Simulator and auditor for the singlet-pair ansible protocol"};
  app.require_subcommand(1);

  const auto add_report_options = [&config](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", config.output_path,
                    "Write the report to this file instead of stdout");
  };
  const auto add_split_options = [&config](CLI::App* cmd) {
    cmd->add_option("--n", config.n_total, "Total particles after amplification")
        ->capture_default_str();
    cmd->add_option("--kx", config.k_x, "Particles measured along x")
        ->capture_default_str();
    cmd->add_option("--kz", config.k_z, "Particles measured along z")
        ->capture_default_str();
  };
  const auto add_threshold_option = [&config](CLI::App* cmd) {
    cmd->add_option("--threshold", config.threshold,
                    "Decision cut on |mean z spin|, strictly between 0 and 1/2")
        ->capture_default_str();
  };

  CLI::App* audit = app.add_subcommand(
      "audit", "Recompute every displayed identity the protocol is built from");
  add_report_options(audit);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Exact outcome tables for both Bob bits under both models");
  add_split_options(enumerate);
  add_report_options(enumerate);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Seeded Monte Carlo trials with a goodness-of-fit check");
  add_split_options(simulate);
  simulate->add_option("--bob-bit", config.bob_bit, "The bit Bob encodes")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  simulate->add_option("--trials", config.trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--seed", config.seed, "Base seed for the trial streams")
      ->capture_default_str();
  add_threshold_option(simulate);
  add_report_options(simulate);

  CLI::App* compare = app.add_subcommand(
      "compare",
      "Channel metrics: both TVDs, both mutual informations, trace distance");
  add_split_options(compare);
  add_threshold_option(compare);
  add_report_options(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qansible::cli::kExitSuccess : qansible::cli::kExitUsage;
  }

  if (audit->parsed()) {
    config.command = Command::Audit;
  } else if (enumerate->parsed()) {
    config.command = Command::Enumerate;
  } else if (simulate->parsed()) {
    config.command = Command::Simulate;
  } else {
    config.command = Command::Compare;
  }

  try {
    return qansible::cli::dispatch(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
