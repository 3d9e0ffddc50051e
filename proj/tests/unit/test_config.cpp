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

#include "aeromec/config.hpp"

#include <doctest.h>
#include <stdexcept>

using namespace aeromec;

TEST_CASE("an empty document resolves to the simulation defaults") {
  const auto config = parse_experiment_config("{}");
  const auto& env = config.env;
  CHECK(env.num_users() == 5);
  CHECK(env.channel.eta_a == 12.08);
  CHECK(env.channel.eta_b == 0.11);
  CHECK(env.channel.eta_los_db == 1.6);
  CHECK(env.channel.eta_nlos_db == 23.0);
  CHECK(env.channel.noise_power_s_w == doctest::Approx(1e-13));  // -100 dBm
  CHECK(env.bandwidth_hz == 1e6);
  CHECK(env.v_max_mps == 20.0);
  CHECK(env.p_max_w == 0.1);
  CHECK(env.compute.f_user_max_hz == 1e8);
  CHECK(env.compute.f_server_max_hz == 2e10);
  CHECK(env.compute.slot_s == 0.5);
  CHECK(env.compute.cycles_per_bit_user == 1000.0);
  CHECK(env.compute.cap_user == 1e-28);
  CHECK(env.secrecy_threshold_bps == 9e5);
  CHECK(env.task_bits == 1e8);
  CHECK(env.energy_budget_j == 20000.0);
  CHECK(env.weights.unit_cost_energy == 1.0);
  CHECK(env.weights.unit_cost_delay == 1.0);
  CHECK(env.z_min_m == 100.0);
  CHECK(env.z_max_m == 150.0);
  CHECK(env.layout.jammer.x == 300.0);
  CHECK(env.layout.jammer.y == 250.0);
  CHECK(env.layout.uav_start.x == 0.0);
  CHECK(env.layout.uav_start.y == 250.0);
  CHECK(env.layout.uav_start.z == 100.0);
  CHECK(env.layout.eavesdropper.center.x == 290.0);
  CHECK(env.layout.eavesdropper.center.y == 150.0);
  CHECK(env.layout.eavesdropper.radius_m == 25.0);
  CHECK(env.layout.eavesdropper.altitude_m == 100.0);
  CHECK(config.train.episodes == 1000);
  CHECK(config.scheme == Scheme::kNoma);
}

TEST_CASE("partial documents override only their keys") {
  const auto config = parse_experiment_config(R"({
    "env": {"task_bits": 2e7, "channel": {"carrier_hz": 2.4e9}},
    "train": {"episodes": 25, "seed": 9},
    "scheme": "tdma",
    "run_id": "bench"
  })");
  CHECK(config.env.task_bits == 2e7);
  CHECK(config.env.channel.carrier_hz == 2.4e9);
  CHECK(config.env.channel.eta_a == 12.08);  // untouched default
  CHECK(config.train.episodes == 25);
  CHECK(config.train.seed == 9);
  CHECK(config.scheme == Scheme::kTdma);
  CHECK(config.env.mode == AccessMode::kTdma);  // scheme drives the mode
  CHECK(config.run_id == "bench");
}

TEST_CASE("malformed and semantically invalid documents are rejected") {
  CHECK_THROWS_AS(parse_experiment_config("{not json"), std::runtime_error);
  CHECK_THROWS_AS(parse_experiment_config(R"({"env": {"weights": {"w_energy": 0.9}}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config(R"({"env": {"z_min_m": 500}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config(R"({"scheme": "cdma"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config(R"({"env": {"mode": "ofdma"}})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config(R"({"sweep": {"key": "nope", "values": [1]}})"),
                  std::invalid_argument);
}

TEST_CASE("serialization round-trips the resolved configuration") {
  auto config = parse_experiment_config(R"({
    "env": {"task_bits": 6e7, "secrecy_threshold_bps": 1.3e6},
    "train": {"episodes": 42},
    "scheme": "noma"
  })");
  const auto text = experiment_config_to_json(config);
  const auto reparsed = parse_experiment_config(text);
  CHECK(experiment_config_to_json(reparsed) == text);
  CHECK(reparsed.env.task_bits == 6e7);
  CHECK(reparsed.train.episodes == 42);
}

TEST_CASE("weight override keeps the pair on the simplex") {
  auto config = parse_experiment_config("{}");
  apply_override(config, "weights.w_energy", 0.8);
  CHECK(config.env.weights.w_energy == 0.8);
  CHECK(config.env.weights.w_delay == doctest::Approx(0.2));
  CHECK_NOTHROW(config.env.validate());
}

TEST_CASE("every sweepable key applies and unknown keys are refused") {
  auto config = parse_experiment_config("{}");
  apply_override(config, "task_bits", 6e7);
  CHECK(config.env.task_bits == 6e7);
  apply_override(config, "secrecy_threshold_bps", 1.3e6);
  CHECK(config.env.secrecy_threshold_bps == 1.3e6);
  apply_override(config, "layout.eavesdropper.radius_m", 50.0);
  CHECK(config.env.layout.eavesdropper.radius_m == 50.0);
  CHECK(is_sweepable_key("weights.w_energy"));
  CHECK_FALSE(is_sweepable_key("layout.users"));
  CHECK_THROWS_AS(apply_override(config, "bogus.key", 1.0), std::invalid_argument);
}

TEST_CASE("env matching ignores the access mode but nothing else") {
  auto a = parse_experiment_config("{}");
  auto b = parse_experiment_config(R"({"scheme": "tdma"})");
  CHECK(env_configs_match(a.env, b.env));
  auto c = parse_experiment_config(R"({"env": {"task_bits": 5e7}})");
  CHECK_FALSE(env_configs_match(a.env, c.env));
}

TEST_CASE("secrecy normalizer is the best-case single-user rate") {
  const auto config = parse_experiment_config("{}");
  // One user at peak power directly under the server at minimum altitude.
  const double best_gain = channel_gain(
      average_path_loss_from_distance_db(config.env.z_min_m, config.env.z_min_m,
                                         config.env.channel));
  const double expected =
      config.env.bandwidth_hz *
      std::log2(1.0 + best_gain * config.env.p_max_w / config.env.channel.noise_power_s_w);
  CHECK(config.env.secrecy_rate_normalizer_bps() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(config.env.secrecy_rate_normalizer_bps() / 1e6 == doctest::Approx(13.2489).epsilon(1e-3));
}
