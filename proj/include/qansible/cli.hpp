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

/// \file cli.hpp
/// Command dispatch behind the qansible executable. Lives in the library so
/// tests can drive commands without spawning processes.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qansible/analysis.hpp"
#include "qansible/protocol.hpp"

namespace qansible::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAuditFailure = 3;

enum class Command { Audit, Enumerate, Simulate, Compare };

std::string to_string(Command command);
Command command_from_string(const std::string& name);

/// Fully parsed invocation. Defaults match the executable's flag defaults.
struct CliConfig {
  Command command = Command::Audit;
  int n_total = 4;
  int k_x = 2;
  int k_z = 2;
  int bob_bit = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  double threshold = 0.25;
  std::string format = "json";   ///< "json" or "csv".
  std::string output_path;       ///< Empty writes to the output stream.

  friend bool operator==(const CliConfig&, const CliConfig&) = default;
};

/// Config echo embedded in every JSON report.
nlohmann::ordered_json config_json(const CliConfig& config);

/// Rebuilds the invocation from a parsed JSON report envelope.
CliConfig config_from_envelope(const nlohmann::ordered_json& envelope);

nlohmann::ordered_json audit_payload(const EquationAuditReport& report);
nlohmann::ordered_json distribution_payload(const OutcomeDistribution& dist);
nlohmann::ordered_json channel_payload(const ChannelReport& report);

/// Runs one command and writes the report to `out` or config.output_path.
/// Returns kExitSuccess, kExitUsage on an invalid config (message on `err`),
/// or kExitAuditFailure when the audit command finds a failing identity.
int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qansible::cli
