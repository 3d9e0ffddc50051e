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

#include "aeromec/env.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aeromec {

namespace {

double clip01(double v) { return std::clamp(v, 0.0, 1.0); }

double clip(double v, double lo, double hi) { return std::clamp(v, lo, hi); }

}  // namespace

double EnvConfig::secrecy_rate_normalizer_bps() const {
  const double best_loss_db = average_path_loss_from_distance_db(z_min_m, z_min_m, channel);
  const double best_gain = channel_gain(best_loss_db);
  return bandwidth_hz * std::log2(1.0 + best_gain * p_max_w / channel.noise_power_s_w);
}

void EnvConfig::validate() const {
  channel.validate();
  compute.validate();
  propulsion.validate();
  weights.validate();
  if (layout.users.empty()) {
    throw std::invalid_argument("env: at least one user required");
  }
  if (!(layout.uav_start.z > 0.0) || !(layout.eavesdropper.altitude_m > 0.0) ||
      layout.eavesdropper.radius_m < 0.0) {
    throw std::invalid_argument("env: invalid layout geometry");
  }
  if (!(z_min_m > 0.0) || !(z_min_m < z_max_m)) {
    throw std::invalid_argument("env: altitude bounds must satisfy 0 < z_min < z_max");
  }
  if (!(v_max_mps > 0.0) || !(bandwidth_hz > 0.0) || !(p_max_w > 0.0) || !(task_bits > 0.0) ||
      !(energy_budget_j > 0.0)) {
    throw std::invalid_argument("env: physical limits must be positive");
  }
  if (d_min_m < 0.0 || secrecy_threshold_bps < 0.0 || jammer_tx_w < 0.0) {
    throw std::invalid_argument("env: thresholds must be nonnegative");
  }
  if (max_slots <= 0) {
    throw std::invalid_argument("env: max_slots must be positive");
  }
  if (!(reward.kappa_f > 0.0) || !(reward.kappa_ac > 0.0) || !(reward.kappa_rc > 0.0) ||
      !(reward.zeta > 0.0)) {
    throw std::invalid_argument("env: reward constants must be positive");
  }
  if (!(arena.x_max > 0.0) || !(arena.y_max > 0.0)) {
    throw std::invalid_argument("env: arena bounds must be positive");
  }
}

AirPosition kinematics_update(const AirPosition& pos, const Action& action,
                              const EnvConfig& config) {
  const double step = action.speed_mps * config.compute.slot_s;
  const double sin_polar = std::sin(action.polar_rad);
  AirPosition next{
      pos.x + step * sin_polar * std::cos(action.azimuth_rad),
      pos.y + step * sin_polar * std::sin(action.azimuth_rad),
      pos.z + step * std::cos(action.polar_rad),
  };
  next.x = clip(next.x, 0.0, config.arena.x_max);
  next.y = clip(next.y, 0.0, config.arena.y_max);
  next.z = clip(next.z, config.z_min_m, config.z_max_m);
  return next;
}

RewardBreakdown compute_reward(const SlotEffects& effects, const RewardConstants& consts,
                               double slot_s) {
  RewardBreakdown terms;
  terms.offload = consts.kappa_f * slot_s * effects.weighted_secrecy_sum_bps;
  terms.collision_penalty = effects.collision_violation ? consts.kappa_ac : 0.0;
  terms.capacity_penalty = effects.capacity_violation ? consts.kappa_rc : 0.0;
  terms.leftover_penalty = effects.terminal ? consts.zeta * effects.leftover_bits : 0.0;
  terms.slot_cost = effects.slot_cost;
  return terms;
}

Environment::Environment(EnvConfig config) : config_(std::move(config)) {
  config_.validate();
  rate_normalizer_bps_ = config_.secrecy_rate_normalizer_bps();
}

EnvState Environment::reset(std::uint64_t seed) {
  rng_.seed(seed);
  const std::size_t k = config_.num_users();
  state_.uav_pos = config_.layout.uav_start;
  state_.residual_energy_j = config_.energy_budget_j;
  state_.per_user_secrecy_bps.assign(k, 0.0);
  state_.per_user_remaining_bits.assign(k, config_.task_bits);
  state_.slot_index = 0;
  ledger_ = EnergyLedger{config_.energy_budget_j, 0.0};
  tasks_.assign(k, UserTaskState{config_.task_bits, 0});
  done_ = false;
  return state_;
}

LinkSnapshot Environment::links_at(const AirPosition& pos) const {
  const std::size_t k = config_.num_users();
  LinkSnapshot links;
  links.gain_to_server.resize(k);
  links.worst_gain_to_eve.resize(k);
  links.worst_interferer_gain_to_eve.resize(k);
  links.loss_to_server_db.resize(k);
  links.loss_to_eve_db.resize(k);
  const auto& region = config_.layout.eavesdropper;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& user = config_.layout.users[i];
    const double loss_s = average_path_loss_db(user, pos, config_.channel);
    links.loss_to_server_db[i] = loss_s;
    links.gain_to_server[i] = channel_gain(loss_s);
    links.worst_gain_to_eve[i] =
        worst_case_gain(user, region, EveRole::kEavesdroppedUser, config_.channel);
    links.worst_interferer_gain_to_eve[i] =
        worst_case_gain(user, region, EveRole::kInterfererOrJammer, config_.channel);
    links.loss_to_eve_db[i] = center_path_loss_db(user, region, config_.channel);
  }
  links.jammer_gain_to_eve_lb =
      worst_case_gain(config_.layout.jammer, region, EveRole::kInterfererOrJammer, config_.channel);
  return links;
}

StepOutcome Environment::step(const std::vector<double>& raw_action) {
  if (done_) {
    throw std::logic_error("env: step() called on a finished episode");
  }
  const std::size_t k = config_.num_users();
  Action action = decode_action(raw_action);

  // A user whose task is already finished neither transmits nor computes.
  for (std::size_t i = 0; i < k; ++i) {
    if (tasks_[i].remaining_bits <= 0.0) {
      action.per_user_power_w[i] = 0.0;
      action.per_user_freq_hz[i] = 0.0;
    }
  }

  // Rates are evaluated at the slot's starting position; the move below
  // takes effect from the next slot.
  const LinkSnapshot links = links_at(state_.uav_pos);
  const PowerAllocation powers{action.per_user_power_w, config_.jammer_tx_w};

  StepInfo info;
  info.secrecy_rate_bps.resize(k);
  info.bits_local.resize(k);
  info.bits_offloaded.resize(k);
  info.tx_power_w = action.per_user_power_w;
  info.cpu_freq_hz = action.per_user_freq_hz;

  for (std::size_t i = 0; i < k; ++i) {
    info.secrecy_rate_bps[i] =
        config_.mode == AccessMode::kTdma
            ? tdma_secrecy_rate(i, links, powers, config_.channel, config_.bandwidth_hz, k)
            : secrecy_rate(i, links, powers, config_.channel, config_.bandwidth_hz);
  }

  double weighted_secrecy_sum = 0.0;
  double user_energy = 0.0;
  double slot_delay = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const bool active = tasks_[i].remaining_bits > 0.0;
    const LocalStep local = local_step(action.per_user_freq_hz[i], config_.compute);
    const OffloadStep offload = offload_step(info.secrecy_rate_bps[i], action.per_user_power_w[i],
                                             config_.compute, config_.secrecy_threshold_bps);
    info.bits_local[i] = local.bits;
    info.bits_offloaded[i] = offload.bits;
    user_energy += local.energy_j + offload.energy_j;
    if (active) {
      weighted_secrecy_sum += info.secrecy_rate_bps[i];
      slot_delay += config_.compute.slot_s;
    }
  }
  info.user_energy_j = user_energy;
  info.slot_delay_s = slot_delay;

  const ServerLoad server = server_load(info.bits_offloaded, config_.compute);
  info.server_energy_j = server.energy_j;
  info.capacity_violation = !server.capacity_ok;

  // Flight.
  state_.uav_pos = kinematics_update(state_.uav_pos, action, config_);
  info.fly_energy_j = propulsion_power(action.speed_mps, config_.propulsion) * config_.compute.slot_s;

  // Collision is judged against the nearest point the eavesdropper could
  // occupy: the uncertainty disk at its operating altitude.
  const GroundPosition uav_xy{state_.uav_pos.x, state_.uav_pos.y};
  const double horizontal =
      std::max(horizontal_distance(uav_xy, config_.layout.eavesdropper.center) -
                   config_.layout.eavesdropper.radius_m,
               0.0);
  const double eve_clearance =
      std::hypot(horizontal, state_.uav_pos.z - config_.layout.eavesdropper.altitude_m);
  info.collision_violation = eve_clearance < config_.d_min_m;

  energy_update(ledger_, info.fly_energy_j, info.server_energy_j);

  double leftover = 0.0;
  bool all_done = true;
  for (std::size_t i = 0; i < k; ++i) {
    data_update(tasks_[i], info.bits_local[i], info.bits_offloaded[i]);
    leftover += tasks_[i].remaining_bits;
    all_done = all_done && tasks_[i].remaining_bits <= 0.0;
  }

  info.slot_cost = episode_cost(user_energy, slot_delay, config_.weights, k);

  const int next_slot = state_.slot_index + 1;
  done_ = all_done || ledger_.exhausted() || next_slot >= config_.max_slots;

  const SlotEffects effects{
      .weighted_secrecy_sum_bps = weighted_secrecy_sum,
      .collision_violation = info.collision_violation,
      .capacity_violation = info.capacity_violation,
      .leftover_bits = leftover,
      .terminal = done_,
      .slot_cost = info.slot_cost,
  };
  info.reward_terms = compute_reward(effects, config_.reward, config_.compute.slot_s);

  state_.residual_energy_j = ledger_.residual_j();
  state_.per_user_secrecy_bps = info.secrecy_rate_bps;
  for (std::size_t i = 0; i < k; ++i) {
    state_.per_user_remaining_bits[i] = tasks_[i].remaining_bits;
  }
  state_.slot_index = next_slot;

  return StepOutcome{state_, info.reward_terms.total(), done_, std::move(info)};
}

std::vector<double> Environment::encode_state(const EnvState& state) const {
  const std::size_t k = config_.num_users();
  std::vector<double> features;
  features.reserve(config_.state_dim());
  // Position expanded from 3 to 8 features by cyclic repetition so its share
  // of the input matches the per-user blocks.
  const double norm_pos[3] = {state.uav_pos.x / config_.arena.x_max,
                              state.uav_pos.y / config_.arena.y_max,
                              state.uav_pos.z / config_.z_max_m};
  for (int i = 0; i < 8; ++i) {
    features.push_back(clip01(norm_pos[i % 3]));
  }
  // Residual energy expanded from 1 to 5 features.
  const double norm_energy = state.residual_energy_j / config_.energy_budget_j;
  for (int i = 0; i < 5; ++i) {
    features.push_back(clip01(norm_energy));
  }
  for (std::size_t i = 0; i < k; ++i) {
    features.push_back(clip01(state.per_user_secrecy_bps[i] / rate_normalizer_bps_));
  }
  for (std::size_t i = 0; i < k; ++i) {
    features.push_back(clip01(state.per_user_remaining_bits[i] / config_.task_bits));
  }
  return features;
}

Action Environment::decode_action(const std::vector<double>& raw) const {
  const std::size_t k = config_.num_users();
  if (raw.size() != config_.action_dim()) {
    throw std::invalid_argument("env: action vector has the wrong length");
  }
  Action action;
  action.speed_mps = clip01(raw[0]) * config_.v_max_mps;
  action.polar_rad = clip01(raw[1]) * std::numbers::pi;
  action.azimuth_rad = clip01(raw[2]) * 2.0 * std::numbers::pi;
  action.per_user_power_w.resize(k);
  action.per_user_freq_hz.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    action.per_user_power_w[i] = clip01(raw[3 + i]) * config_.p_max_w;
    action.per_user_freq_hz[i] = clip01(raw[3 + k + i]) * config_.compute.f_user_max_hz;
  }
  return action;
}

}  // namespace aeromec
