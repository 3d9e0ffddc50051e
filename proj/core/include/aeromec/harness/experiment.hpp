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

#ifndef AEROMEC_HARNESS_EXPERIMENT_HPP
#define AEROMEC_HARNESS_EXPERIMENT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "aeromec/config.hpp"
#include "aeromec/harness/metrics.hpp"

namespace aeromec {

/// Closed-form cost of the no-offloading baseline: every user grinds its
/// whole task locally at peak CPU frequency. Exactly linear in the task
/// size.
struct LocalCost {
  double delay_per_user_s = 0.0;
  double energy_per_user_j = 0.0;
  double average_cost = 0.0;
};

LocalCost local_only_cost(const EnvConfig& env);

/// What one finished run left on disk plus its summary numbers.
struct RunArtifacts {
  std::filesystem::path run_dir;
  std::string run_id;
  Scheme scheme = Scheme::kNoma;
  std::uint64_t seed = 0;
  std::vector<MetricsRecord> metrics;
  double converged_cost = 0.0;
  double wall_time_s = 0.0;
};

/// Execute one run: trains NOMA/TDMA schemes per the learning loop and
/// writes per-episode metrics (CSV and JSON lines), the final-policy
/// trajectory, and a checkpoint; the local scheme writes its closed-form
/// record. Files land in output_dir/run_id/.
RunArtifacts run_single(const ExperimentConfig& config);

/// Run one grid point per sweep value (run ids suffixed with the value) and
/// return the artifacts in grid order. Requires config.sweep.
std::vector<RunArtifacts> run_sweep(const ExperimentConfig& config);

/// Dispatch: run_sweep when a sweep is configured, run_single otherwise.
std::vector<RunArtifacts> run_experiment(const ExperimentConfig& config);

/// Greedy rollout of a trained actor checkpoint on a fresh environment.
struct EvalResult {
  double episode_cost = 0.0;
  double accumulated_reward = 0.0;
  int episode_slots = 0;
  bool completed_all_tasks = false;
  std::vector<TrajectoryRecord> trajectory;
};

EvalResult evaluate_checkpoint(const EnvConfig& env_config,
                               const std::filesystem::path& checkpoint_path);

/// Summary line of one run for scheme comparison.
struct SchemeSummary {
  std::string run_id;
  Scheme scheme = Scheme::kNoma;
  std::uint64_t seed = 0;
  double converged_cost = 0.0;
};

/// Load >= 2 finished runs, check their env sections match (apart from the
/// access mode, which is the scheme itself), and return their converged
/// costs ordered from cheapest to most expensive. Throws
/// std::invalid_argument on fewer than two runs and std::runtime_error on
/// mismatched configurations.
std::vector<SchemeSummary> compare_runs(const std::vector<std::filesystem::path>& run_dirs);

/// Render the comparison as a fixed-width text table.
std::string format_comparison(const std::vector<SchemeSummary>& summaries);

}  // namespace aeromec

#endif  // AEROMEC_HARNESS_EXPERIMENT_HPP
