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
#include <doctest.h>
#include <stdexcept>

using namespace aeromec;

namespace {
const ComputeParams kCompute;       // table defaults
const PropulsionParams kRotor;      // canonical rotary-wing constants
const CostWeights kWeights;         // 0.5 / 0.5, unit costs 1

// Straight-line re-statement of the propulsion closed form, kept separate
// from the implementation on purpose.
double propulsion_oracle(double v, const PropulsionParams& p) {
  const double induced = p.induced_power_w *
                         std::pow(std::sqrt(1.0 + std::pow(v, 4.0) /
                                                      (4.0 * std::pow(p.hover_induced_speed_mps, 4.0))) -
                                      v * v / (2.0 * p.hover_induced_speed_mps *
                                               p.hover_induced_speed_mps),
                                  0.5);
  const double parasite = 0.5 * p.fuselage_drag_ratio * p.air_density_kg_m3 * p.rotor_solidity *
                          p.rotor_disc_area_m2 * std::pow(v, 3.0);
  const double blade =
      p.blade_profile_power_w * (1.0 + 3.0 * v * v / std::pow(p.tip_speed_mps, 2.0));
  return induced + parasite + blade;
}
}  // namespace

TEST_CASE("local computation at 0.1 GHz for half a second") {
  const auto step = local_step(1e8, kCompute);
  CHECK(step.bits == doctest::Approx(50000.0).epsilon(1e-12));
  CHECK(step.energy_j == doctest::Approx(5e-5).epsilon(1e-12));
}

TEST_CASE("idle CPU computes nothing for free") {
  const auto step = local_step(0.0, kCompute);
  CHECK(step.bits == 0.0);
  CHECK(step.energy_j == 0.0);
}

TEST_CASE("local energy follows the cubic law") {
  const auto base = local_step(4e7, kCompute);
  const auto doubled = local_step(8e7, kCompute);
  CHECK(doubled.bits == doctest::Approx(2.0 * base.bits).epsilon(1e-12));
  CHECK(doubled.energy_j == doctest::Approx(8.0 * base.energy_j).epsilon(1e-12));
}

TEST_CASE("local frequency outside the peak is a contract violation") {
  CHECK_THROWS_AS(local_step(kCompute.f_user_max_hz * 1.01, kCompute), std::invalid_argument);
  CHECK_THROWS_AS(local_step(-1.0, kCompute), std::invalid_argument);
}

TEST_CASE("offload gate opens at the threshold") {
  const double threshold = 9e5;
  const auto open = offload_step(1e7, 0.1, kCompute, threshold);
  CHECK(open.bits == doctest::Approx(5e6).epsilon(1e-12));
  CHECK(open.energy_j == doctest::Approx(0.05).epsilon(1e-12));
  // Below threshold the bits are discarded but the power was still radiated.
  const auto closed = offload_step(5e5, 0.1, kCompute, threshold);
  CHECK(closed.bits == 0.0);
  CHECK(closed.energy_j == doctest::Approx(0.05).epsilon(1e-12));
  const auto silent = offload_step(1e7, 0.0, kCompute, threshold);
  CHECK(silent.energy_j == 0.0);
}

TEST_CASE("server load frequencies, energy, and capacity flag") {
  const double bits[] = {5e5};
  const auto load = server_load(bits, kCompute);
  CHECK(load.per_user_freq_hz[0] == doctest::Approx(1e9).epsilon(1e-12));
  CHECK(load.energy_j == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(load.capacity_ok);

  const double none[] = {0.0, 0.0};
  const auto idle = server_load(none, kCompute);
  CHECK(idle.total_freq_hz == 0.0);
  CHECK(idle.energy_j == 0.0);
  CHECK(idle.capacity_ok);

  // 10.5e6 bits in half a second needs 21 GHz, over the 20 GHz peak.
  const double heavy[] = {5.25e6, 5.25e6};
  const auto overloaded = server_load(heavy, kCompute);
  CHECK(overloaded.total_freq_hz == doctest::Approx(2.1e10));
  CHECK_FALSE(overloaded.capacity_ok);
}

TEST_CASE("server energy follows the cubic law") {
  const double one[] = {2e5};
  const double two[] = {4e5};
  const auto a = server_load(one, kCompute);
  const auto b = server_load(two, kCompute);
  CHECK(b.energy_j == doctest::Approx(8.0 * a.energy_j).epsilon(1e-12));
}

TEST_CASE("hover power is the sum of blade and induced terms") {
  CHECK(propulsion_power(0.0, kRotor) == doctest::Approx(168.49).epsilon(1e-12));
}

TEST_CASE("propulsion matches the independent closed form on a speed grid") {
  for (double v = 0.0; v <= 20.0; v += 0.25) {
    const double got = propulsion_power(v, kRotor);
    const double want = propulsion_oracle(v, kRotor);
    CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
    CHECK(got > 0.0);
  }
}

TEST_CASE("energy ledger exhausts exactly on budget") {
  EnergyLedger ledger{20000.0, 0.0};
  for (int slot = 0; slot < 199; ++slot) {
    energy_update(ledger, 90.0, 10.0);
    CHECK_FALSE(ledger.exhausted());
  }
  energy_update(ledger, 90.0, 10.0);
  CHECK(ledger.exhausted());
  CHECK(ledger.residual_j() == doctest::Approx(0.0));
}

TEST_CASE("zero spend leaves the ledger unchanged") {
  EnergyLedger ledger{500.0, 123.0};
  energy_update(ledger, 0.0, 0.0);
  CHECK(ledger.spent_j == 123.0);
  CHECK(ledger.residual_j() == doctest::Approx(377.0));
}

TEST_CASE("data update consumes bits and clamps at zero") {
  UserTaskState task{1e8, 0};
  data_update(task, 5e4, 5e4);
  CHECK(task.remaining_bits == doctest::Approx(1e8 - 1e5));
  CHECK(task.active_slots == 1);
  // Overshoot clamps.
  task.remaining_bits = 1e4;
  data_update(task, 5e4, 0.0);
  CHECK(task.remaining_bits == 0.0);
  CHECK(task.active_slots == 2);
  // A finished task no longer accumulates delay.
  data_update(task, 0.0, 0.0);
  CHECK(task.active_slots == 2);
}

TEST_CASE("episode cost arithmetic and weight interpolation") {
  CostWeights w;
  w.w_energy = 0.5;
  w.w_delay = 0.5;
  CHECK(episode_cost(100.0, 200.0, w, 5) == doctest::Approx(30.0).epsilon(1e-14));
  w.w_energy = 0.0;
  w.w_delay = 1.0;
  CHECK(episode_cost(100.0, 200.0, w, 5) == doctest::Approx(40.0).epsilon(1e-14));
  w.w_energy = 1.0;
  w.w_delay = 0.0;
  CHECK(episode_cost(100.0, 200.0, w, 5) == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("episode cost is linear in each total separately") {
  CHECK(episode_cost(300.0, 200.0, kWeights, 5) ==
        doctest::Approx(episode_cost(100.0, 200.0, kWeights, 5) +
                        episode_cost(200.0, 0.0, kWeights, 5))
            .epsilon(1e-12));
  // w_energy interpolates exactly between the two pure costs.
  for (double w1 = 0.0; w1 <= 1.0; w1 += 0.1) {
    CostWeights w;
    w.w_energy = w1;
    w.w_delay = 1.0 - w1;
    const double pure_energy = episode_cost(100.0, 200.0, CostWeights{1.0, 0.0, 1.0, 1.0}, 5);
    const double pure_delay = episode_cost(100.0, 200.0, CostWeights{0.0, 1.0, 1.0, 1.0}, 5);
    CHECK(episode_cost(100.0, 200.0, w, 5) ==
          doctest::Approx(w1 * pure_energy + (1.0 - w1) * pure_delay).epsilon(1e-12));
  }
}

TEST_CASE("cost weights must sum to one") {
  CostWeights w;
  w.w_energy = 0.7;
  w.w_delay = 0.5;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  CHECK_THROWS_AS(episode_cost(1.0, 1.0, w, 1), std::invalid_argument);
}
