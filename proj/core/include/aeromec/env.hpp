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

#ifndef AEROMEC_ENV_HPP
#define AEROMEC_ENV_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "aeromec/channel.hpp"
#include "aeromec/geometry.hpp"
#include "aeromec/mec.hpp"
#include "aeromec/rates.hpp"

namespace aeromec {

/// Multiple-access scheme the uplink runs.
enum class AccessMode { kNoma, kTdma };

/// Static geometry of one scenario.
struct NetworkLayout {
  std::vector<GroundPosition> users;
  GroundPosition jammer{300.0, 250.0};
  EavesdropperRegion eavesdropper{{290.0, 150.0}, 25.0, 100.0};
  AirPosition uav_start{0.0, 250.0, 100.0};
};

/// Reward shaping constants.
struct RewardConstants {
  double kappa_f = 2.5e-7;  ///< offloading reward scale
  double kappa_ac = 1.0;    ///< collision-constraint penalty
  double kappa_rc = 10.0;   ///< server-capacity penalty
  double zeta = 1e-7;       ///< terminal leftover-data penalty scale
};

/// Horizontal operating range used both to clip flight and to normalize the
/// position features.
struct Arena {
  double x_max = 500.0;
  double y_max = 500.0;
};

struct EnvConfig {
  NetworkLayout layout;
  ChannelParams channel;
  ComputeParams compute;
  PropulsionParams propulsion;
  CostWeights weights;
  double bandwidth_hz = 1e6;
  double jammer_tx_w = 0.1;
  double v_max_mps = 20.0;
  double z_min_m = 100.0;
  double z_max_m = 150.0;
  double d_min_m = 10.0;  ///< minimum separation from the eavesdropper region
  double p_max_w = 0.1;
  double secrecy_threshold_bps = 9e5;
  double task_bits = 1e8;  ///< initial task size per user
  double energy_budget_j = 20000.0;
  RewardConstants reward;
  int max_slots = 400;
  Arena arena;
  AccessMode mode = AccessMode::kNoma;

  std::size_t num_users() const { return layout.users.size(); }
  /// Number of features fed to the policy (position expanded 3 -> 8,
  /// energy 1 -> 5, plus per-user secrecy rate and remaining data).
  std::size_t state_dim() const { return 2 * num_users() + 13; }
  std::size_t action_dim() const { return 3 + 2 * num_users(); }

  /// Largest secure offloading rate any user could see: one user at peak
  /// power directly below the server at minimum altitude, no interference.
  /// Used to normalize the per-user rate features.
  double secrecy_rate_normalizer_bps() const;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

/// Raw (unnormalized) MDP state.
struct EnvState {
  AirPosition uav_pos;
  double residual_energy_j = 0.0;
  std::vector<double> per_user_secrecy_bps;
  std::vector<double> per_user_remaining_bits;
  int slot_index = 0;
};

/// Physical action after scaling from the policy's [0,1] outputs.
struct Action {
  double speed_mps = 0.0;
  double polar_rad = 0.0;    ///< angle from the +z axis, [0, pi]
  double azimuth_rad = 0.0;  ///< angle in the xy plane, [0, 2*pi]
  std::vector<double> per_user_power_w;
  std::vector<double> per_user_freq_hz;
};

/// Additive pieces of the slot reward; total() reproduces the reward
/// exactly.
struct RewardBreakdown {
  double offload = 0.0;           ///< + kappa_f * dt * sum of active secrecy rates
  double collision_penalty = 0.0;  ///< - kappa_ac when too close to the region
  double capacity_penalty = 0.0;   ///< - kappa_rc when the server is overloaded
  double leftover_penalty = 0.0;   ///< - zeta * leftover bits, terminal slot only
  double slot_cost = 0.0;          ///< - this slot's weighted computation cost

  double total() const {
    return offload - collision_penalty - capacity_penalty - leftover_penalty - slot_cost;
  }
};

/// What one transition did, for reward computation and diagnostics.
struct SlotEffects {
  double weighted_secrecy_sum_bps = 0.0;  ///< sum of secrecy rates over still-active users
  bool collision_violation = false;
  bool capacity_violation = false;
  double leftover_bits = 0.0;  ///< total remaining bits after the slot
  bool terminal = false;
  double slot_cost = 0.0;  ///< per-slot share of the weighted computation cost
};

/// Per-slot diagnostics attached to every step outcome.
struct StepInfo {
  RewardBreakdown reward_terms;
  bool collision_violation = false;
  bool capacity_violation = false;
  std::vector<double> bits_local;
  std::vector<double> bits_offloaded;
  std::vector<double> secrecy_rate_bps;
  std::vector<double> tx_power_w;   ///< effective transmit power (finished users idle)
  std::vector<double> cpu_freq_hz;  ///< effective local CPU frequency
  double user_energy_j = 0.0;    ///< local + transmit energy, all users
  double server_energy_j = 0.0;  ///< server-side computation energy
  double fly_energy_j = 0.0;
  double slot_cost = 0.0;
  double slot_delay_s = 0.0;  ///< delay charged this slot across users
};

struct StepOutcome {
  EnvState next_state;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

/// Advance the server position by one slot of flight in spherical
/// coordinates, then clip altitude to [z_min, z_max] and the horizontal
/// position to the arena.
AirPosition kinematics_update(const AirPosition& pos, const Action& action,
                              const EnvConfig& config);

/// Slot reward from the transition effects.
RewardBreakdown compute_reward(const SlotEffects& effects, const RewardConstants& consts,
                               double slot_s);

/**
 * The offloading MDP. One instance runs one episode at a time; call reset()
 * then step() until the outcome reports done. Instances are independent, so
 * any number may run concurrently, but a single instance has one writer.
 */
class Environment {
 public:
  explicit Environment(EnvConfig config);

  const EnvConfig& config() const { return config_; }

  /// Start a new episode: server at the start pose, full budget, full tasks.
  /// Deterministic for a given seed.
  EnvState reset(std::uint64_t seed = 0);

  /// Execute one slot from the policy's raw [0,1] action vector.
  /// Throws std::logic_error when the episode is already finished.
  StepOutcome step(const std::vector<double>& raw_action);

  const EnvState& state() const { return state_; }
  bool done() const { return done_; }

  /// Normalized feature vector of length state_dim(), all entries in [0,1].
  std::vector<double> encode_state(const EnvState& state) const;

  /// Scale a raw [0,1] action vector (clipped if outside) to physical units.
  Action decode_action(const std::vector<double>& raw) const;

  double secrecy_rate_normalizer_bps() const { return rate_normalizer_bps_; }

 private:
  LinkSnapshot links_at(const AirPosition& pos) const;

  EnvConfig config_;
  double rate_normalizer_bps_ = 0.0;
  EnvState state_;
  EnergyLedger ledger_;
  std::vector<UserTaskState> tasks_;
  bool done_ = true;
  std::mt19937_64 rng_;  // reserved for stochastic dynamics; transitions are deterministic
};

}  // namespace aeromec

#endif  // AEROMEC_ENV_HPP
