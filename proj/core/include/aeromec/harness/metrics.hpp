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

#ifndef AEROMEC_HARNESS_METRICS_HPP
#define AEROMEC_HARNESS_METRICS_HPP

#include <filesystem>
#include <span>
#include <vector>

#include "aeromec/ddpg/agent.hpp"
#include "aeromec/geometry.hpp"

namespace aeromec {

/// One per-episode row of the metrics files. Deliberately excludes wall
/// time so that files are byte-identical across reruns of the same seed;
/// timing goes to the per-run info file instead.
struct MetricsRecord {
  int episode = 0;
  double accumulated_reward = 0.0;
  double average_cost = 0.0;
  double energy_cost = 0.0;
  double delay_cost = 0.0;
  double reward_offload = 0.0;
  double penalty_collision = 0.0;
  double penalty_capacity = 0.0;
  double penalty_leftover = 0.0;
  long collision_violations = 0;
  long capacity_violations = 0;
  int episode_slots = 0;

  bool operator==(const MetricsRecord&) const = default;
};

MetricsRecord to_metrics_record(const EpisodeStats& stats);

/// One slot of an evaluation rollout: where the server was while the slot's
/// rates were realized, and what each user did.
struct TrajectoryRecord {
  int slot = 0;
  AirPosition uav_pos;
  std::vector<double> power_w;
  std::vector<double> freq_hz;
  std::vector<double> secrecy_bps;
  std::vector<double> remaining_bits;
};

// All numeric fields are printed with shortest round-trip formatting, so a
// parsed file reproduces the records exactly.
void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsRecord> records);
std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path);
void write_metrics_jsonl(const std::filesystem::path& path, std::span<const MetricsRecord> records);
std::vector<MetricsRecord> read_metrics_jsonl(const std::filesystem::path& path);
void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryRecord> records);

/// Convergence statistic: mean average cost over the last `window` episodes
/// (or all of them when the run is shorter).
double converged_cost(std::span<const MetricsRecord> records, int window = 50);

}  // namespace aeromec

#endif  // AEROMEC_HARNESS_METRICS_HPP
