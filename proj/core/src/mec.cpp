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

#include "aeromec/mec.hpp"

#include <cmath>
#include <stdexcept>

namespace aeromec {

void ComputeParams::validate() const {
  if (!(cycles_per_bit_user > 0.0) || !(cycles_per_bit_server > 0.0) || !(cap_user > 0.0) ||
      !(cap_server > 0.0) || !(f_user_max_hz > 0.0) || !(f_server_max_hz > 0.0) ||
      !(slot_s > 0.0)) {
    throw std::invalid_argument("mec: compute parameters must be positive");
  }
}

void PropulsionParams::validate() const {
  if (!(blade_profile_power_w > 0.0) || !(induced_power_w > 0.0) || !(tip_speed_mps > 0.0) ||
      !(hover_induced_speed_mps > 0.0) || !(fuselage_drag_ratio > 0.0) ||
      !(air_density_kg_m3 > 0.0) || !(rotor_solidity > 0.0) || !(rotor_disc_area_m2 > 0.0)) {
    throw std::invalid_argument("mec: propulsion parameters must be positive");
  }
}

void CostWeights::validate() const {
  if (w_energy < 0.0 || w_energy > 1.0 || w_delay < 0.0 || w_delay > 1.0) {
    throw std::invalid_argument("mec: cost weights must lie in [0,1]");
  }
  if (std::abs(w_energy + w_delay - 1.0) > 1e-12) {
    throw std::invalid_argument("mec: cost weights must sum to 1");
  }
  if (!(unit_cost_energy >= 0.0) || !(unit_cost_delay >= 0.0)) {
    throw std::invalid_argument("mec: unit costs must be nonnegative");
  }
}

LocalStep local_step(double f_hz, const ComputeParams& params) {
  if (!(f_hz >= 0.0) || f_hz > params.f_user_max_hz) {
    throw std::invalid_argument("mec: local CPU frequency outside [0, f_max]");
  }
  return {
      .bits = params.slot_s * f_hz / params.cycles_per_bit_user,
      .energy_j = params.slot_s * params.cap_user * f_hz * f_hz * f_hz,
  };
}

OffloadStep offload_step(double secrecy_rate_bps, double tx_power_w, const ComputeParams& params,
                         double gate_threshold_bps) {
  if (!(tx_power_w >= 0.0)) {
    throw std::invalid_argument("mec: transmit power must be nonnegative");
  }
  const bool gate_open = secrecy_rate_bps >= gate_threshold_bps;
  return {
      .bits = gate_open ? params.slot_s * secrecy_rate_bps : 0.0,
      .energy_j = params.slot_s * tx_power_w,
  };
}

ServerLoad server_load(std::span<const double> bits_offloaded_per_user,
                       const ComputeParams& params) {
  ServerLoad load;
  load.per_user_freq_hz.reserve(bits_offloaded_per_user.size());
  for (double bits : bits_offloaded_per_user) {
    const double f = bits * params.cycles_per_bit_server / params.slot_s;
    load.per_user_freq_hz.push_back(f);
    load.total_freq_hz += f;
    load.energy_j += params.slot_s * params.cap_server * f * f * f;
  }
  load.capacity_ok = load.total_freq_hz <= params.f_server_max_hz;
  return load;
}

double propulsion_power(double v_mps, const PropulsionParams& params) {
  const double v2 = v_mps * v_mps;
  const double v0_2 = params.hover_induced_speed_mps * params.hover_induced_speed_mps;
  const double induced =
      params.induced_power_w *
      std::sqrt(std::sqrt(1.0 + v2 * v2 / (4.0 * v0_2 * v0_2)) - v2 / (2.0 * v0_2));
  const double parasite = 0.5 * params.fuselage_drag_ratio * params.air_density_kg_m3 *
                          params.rotor_solidity * params.rotor_disc_area_m2 * v2 * v_mps;
  const double blade = params.blade_profile_power_w *
                       (1.0 + 3.0 * v2 / (params.tip_speed_mps * params.tip_speed_mps));
  return induced + parasite + blade;
}

void energy_update(EnergyLedger& ledger, double fly_energy_j, double compute_energy_j) {
  if (!(fly_energy_j >= 0.0) || !(compute_energy_j >= 0.0)) {
    throw std::invalid_argument("mec: energies must be nonnegative");
  }
  ledger.spent_j += fly_energy_j + compute_energy_j;
}

void data_update(UserTaskState& task, double bits_local, double bits_offloaded) {
  if (!(bits_local >= 0.0) || !(bits_offloaded >= 0.0)) {
    throw std::invalid_argument("mec: processed bits must be nonnegative");
  }
  if (task.remaining_bits > 0.0) {
    ++task.active_slots;
  }
  task.remaining_bits = std::max(task.remaining_bits - bits_local - bits_offloaded, 0.0);
}

double episode_cost(double total_user_energy_j, double total_user_delay_s,
                    const CostWeights& weights, std::size_t num_users) {
  weights.validate();
  if (num_users == 0) {
    throw std::invalid_argument("mec: cost needs at least one user");
  }
  return (weights.w_energy * weights.unit_cost_energy * total_user_energy_j +
          weights.w_delay * weights.unit_cost_delay * total_user_delay_s) /
         static_cast<double>(num_users);
}

}  // namespace aeromec
