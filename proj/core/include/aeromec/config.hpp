// Copyright 2026 The AeroMEC Authors.
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

#ifndef AEROMEC_CONFIG_HPP
#define AEROMEC_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aeromec/ddpg/agent.hpp"
#include "aeromec/env.hpp"

namespace aeromec {

enum class Scheme { kNoma, kTdma, kLocal };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);

/// One-parameter sweep over a recognized configuration key.
struct SweepSpec {
  std::string key;
  std::vector<double> values;
};

/// Everything one experiment run needs.
struct ExperimentConfig {
  EnvConfig env;
  TrainConfig train;
  Scheme scheme = Scheme::kNoma;
  std::optional<SweepSpec> sweep;
  std::filesystem::path output_dir = "runs";
  std::string run_id = "run";

  void validate() const;
};

/// Parse an experiment configuration from a JSON file. Every field has the
/// default simulation value, so partial files (including `{}`) are valid.
/// Throws std::runtime_error on unreadable files or malformed JSON and
/// std::invalid_argument on semantically bad values.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Parse from a JSON string (used by tests and the sweep machinery).
ExperimentConfig parse_experiment_config(const std::string& json_text);

/// Serialize the fully-resolved configuration back to JSON text.
std::string experiment_config_to_json(const ExperimentConfig& config);

/// The sweepable keys: dotted paths into the env section. `w_energy`
/// adjustments keep the weight pair summing to one.
bool is_sweepable_key(const std::string& key);

/// Apply `key = value` to the configuration. Throws std::invalid_argument
/// for unrecognized keys.
void apply_override(ExperimentConfig& config, const std::string& key, double value);

/// True when two runs are comparable: identical env sections apart from the
/// access mode (which is the scheme under comparison).
bool env_configs_match(const EnvConfig& a, const EnvConfig& b);

}  // namespace aeromec

#endif  // AEROMEC_CONFIG_HPP
