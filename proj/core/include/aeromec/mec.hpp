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

#ifndef AEROMEC_MEC_HPP
#define AEROMEC_MEC_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace aeromec {

/// CPU and timing constants of the computation model.
struct ComputeParams {
  double cycles_per_bit_user = 1000.0;    ///< cycles a user needs per bit
  double cycles_per_bit_server = 1000.0;  ///< cycles the server needs per bit
  double cap_user = 1e-28;                ///< effective switched capacitance, user chips
  double cap_server = 1e-28;              ///< effective switched capacitance, server chip
  double f_user_max_hz = 1e8;             ///< peak user CPU frequency (0.1 GHz)
  double f_server_max_hz = 2e10;          ///< peak server CPU frequency (20 GHz)
  double slot_s = 0.5;                    ///< slot duration (s)

  void validate() const;
};

/// Rotary-wing propulsion model constants. The defaults are the canonical
/// values of the standard rotary-wing power model; override per platform.
struct PropulsionParams {
  double blade_profile_power_w = 79.86;     ///< P0, blade profile power in hover
  double induced_power_w = 88.63;           ///< Pi, induced power in hover
  double tip_speed_mps = 120.0;             ///< rotor blade tip speed
  double hover_induced_speed_mps = 4.03;    ///< mean rotor induced speed in hover
  double fuselage_drag_ratio = 0.6;         ///< d0
  double air_density_kg_m3 = 1.225;         ///< rho
  double rotor_solidity = 0.05;             ///< s
  double rotor_disc_area_m2 = 0.503;        ///< A

  void validate() const;
};

/// Usable-energy bookkeeping for the aerial server. Only the budget
/// (capacity minus reserve) matters to the model.
struct EnergyLedger {
  double budget_j = 20000.0;
  double spent_j = 0.0;

  double residual_j() const { return budget_j - spent_j; }
  bool exhausted() const { return residual_j() <= 0.0; }
};

/// Weights of the energy/delay cost blend. w_energy + w_delay must equal 1.
struct CostWeights {
  double w_energy = 0.5;
  double w_delay = 0.5;
  double unit_cost_energy = 1.0;
  double unit_cost_delay = 1.0;

  void validate() const;
};

/// Remaining task data of one user plus the count of slots it has been
/// active, which accumulates its execution delay.
struct UserTaskState {
  double remaining_bits = 0.0;
  long active_slots = 0;
};

struct LocalStep {
  double bits = 0.0;
  double energy_j = 0.0;
};

struct OffloadStep {
  double bits = 0.0;
  double energy_j = 0.0;
};

struct ServerLoad {
  std::vector<double> per_user_freq_hz;
  double total_freq_hz = 0.0;
  double energy_j = 0.0;
  bool capacity_ok = true;
};

/// Bits computed locally in one slot at CPU frequency `f_hz`, and the energy
/// spent doing so. Throws std::invalid_argument when f is outside
/// [0, f_user_max_hz].
LocalStep local_step(double f_hz, const ComputeParams& params);

/// Bits securely offloaded in one slot. Bits count only when the secrecy
/// rate clears the minimum secure-rate threshold; transmit energy is spent
/// either way since the power was radiated.
OffloadStep offload_step(double secrecy_rate_bps, double tx_power_w, const ComputeParams& params,
                         double gate_threshold_bps);

/// Server CPU frequencies needed to process each user's offloaded bits
/// within the slot, the energy that costs, and whether the total stays
/// within the server's peak frequency. A violation is reported, not thrown.
ServerLoad server_load(std::span<const double> bits_offloaded_per_user,
                       const ComputeParams& params);

/// Propulsion power of the rotary-wing server at forward speed `v_mps`.
double propulsion_power(double v_mps, const PropulsionParams& params);

/// Charge one slot of flight and computation energy to the ledger.
void energy_update(EnergyLedger& ledger, double fly_energy_j, double compute_energy_j);

/// Consume processed bits from a user's task; remaining data never goes
/// negative, and a slot that started with data left counts toward delay.
void data_update(UserTaskState& task, double bits_local, double bits_offloaded);

/// Weighted average computation cost over the whole episode: the energy and
/// delay totals are user-side only (the server's energy lives on the ledger).
double episode_cost(double total_user_energy_j, double total_user_delay_s,
                    const CostWeights& weights, std::size_t num_users);

}  // namespace aeromec

#endif  // AEROMEC_MEC_HPP
