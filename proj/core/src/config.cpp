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

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace aeromec {

using nlohmann::json;

namespace {

// Reads `key` into `value` when present, leaving the default otherwise.
template <class T>
void get_if_present(const json& j, const char* key, T& value) {
  if (j.contains(key)) {
    value = j.at(key).get<T>();
  }
}

GroundPosition ground_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("config: ground positions are [x, y] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

AirPosition air_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("config: air positions are [x, y, z] triples");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json to_json(const GroundPosition& p) { return json::array({p.x, p.y}); }
json to_json(const AirPosition& p) { return json::array({p.x, p.y, p.z}); }

NetworkLayout default_layout() {
  NetworkLayout layout;
  layout.users = {{150.0, 300.0}, {280.0, 280.0}, {150.0, 150.0}, {320.0, 180.0}, {260.0, 120.0}};
  return layout;
}

void layout_from_json(const json& j, NetworkLayout& layout) {
  if (j.contains("users")) {
    layout.users.clear();
    for (const auto& u : j.at("users")) {
      layout.users.push_back(ground_from_json(u));
    }
  }
  if (j.contains("jammer")) layout.jammer = ground_from_json(j.at("jammer"));
  if (j.contains("eavesdropper")) {
    const auto& e = j.at("eavesdropper");
    if (e.contains("center")) layout.eavesdropper.center = ground_from_json(e.at("center"));
    get_if_present(e, "radius_m", layout.eavesdropper.radius_m);
    get_if_present(e, "altitude_m", layout.eavesdropper.altitude_m);
  }
  if (j.contains("uav_start")) layout.uav_start = air_from_json(j.at("uav_start"));
}

json layout_to_json(const NetworkLayout& layout) {
  json users = json::array();
  for (const auto& u : layout.users) users.push_back(to_json(u));
  return json{
      {"users", users},
      {"jammer", to_json(layout.jammer)},
      {"eavesdropper",
       {{"center", to_json(layout.eavesdropper.center)},
        {"radius_m", layout.eavesdropper.radius_m},
        {"altitude_m", layout.eavesdropper.altitude_m}}},
      {"uav_start", to_json(layout.uav_start)},
  };
}

void env_from_json(const json& j, EnvConfig& env) {
  if (j.contains("layout")) layout_from_json(j.at("layout"), env.layout);
  if (j.contains("channel")) {
    const auto& c = j.at("channel");
    get_if_present(c, "eta_a", env.channel.eta_a);
    get_if_present(c, "eta_b", env.channel.eta_b);
    get_if_present(c, "eta_los_db", env.channel.eta_los_db);
    get_if_present(c, "eta_nlos_db", env.channel.eta_nlos_db);
    get_if_present(c, "carrier_hz", env.channel.carrier_hz);
    get_if_present(c, "noise_power_s_w", env.channel.noise_power_s_w);
    get_if_present(c, "noise_power_e_w", env.channel.noise_power_e_w);
  }
  if (j.contains("compute")) {
    const auto& c = j.at("compute");
    get_if_present(c, "cycles_per_bit_user", env.compute.cycles_per_bit_user);
    get_if_present(c, "cycles_per_bit_server", env.compute.cycles_per_bit_server);
    get_if_present(c, "cap_user", env.compute.cap_user);
    get_if_present(c, "cap_server", env.compute.cap_server);
    get_if_present(c, "f_user_max_hz", env.compute.f_user_max_hz);
    get_if_present(c, "f_server_max_hz", env.compute.f_server_max_hz);
    get_if_present(c, "slot_s", env.compute.slot_s);
  }
  if (j.contains("propulsion")) {
    const auto& p = j.at("propulsion");
    get_if_present(p, "blade_profile_power_w", env.propulsion.blade_profile_power_w);
    get_if_present(p, "induced_power_w", env.propulsion.induced_power_w);
    get_if_present(p, "tip_speed_mps", env.propulsion.tip_speed_mps);
    get_if_present(p, "hover_induced_speed_mps", env.propulsion.hover_induced_speed_mps);
    get_if_present(p, "fuselage_drag_ratio", env.propulsion.fuselage_drag_ratio);
    get_if_present(p, "air_density_kg_m3", env.propulsion.air_density_kg_m3);
    get_if_present(p, "rotor_solidity", env.propulsion.rotor_solidity);
    get_if_present(p, "rotor_disc_area_m2", env.propulsion.rotor_disc_area_m2);
  }
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    get_if_present(w, "w_energy", env.weights.w_energy);
    get_if_present(w, "w_delay", env.weights.w_delay);
    get_if_present(w, "unit_cost_energy", env.weights.unit_cost_energy);
    get_if_present(w, "unit_cost_delay", env.weights.unit_cost_delay);
  }
  if (j.contains("reward")) {
    const auto& r = j.at("reward");
    get_if_present(r, "kappa_f", env.reward.kappa_f);
    get_if_present(r, "kappa_ac", env.reward.kappa_ac);
    get_if_present(r, "kappa_rc", env.reward.kappa_rc);
    get_if_present(r, "zeta", env.reward.zeta);
  }
  if (j.contains("arena")) {
    const auto& a = j.at("arena");
    get_if_present(a, "x_max", env.arena.x_max);
    get_if_present(a, "y_max", env.arena.y_max);
  }
  get_if_present(j, "bandwidth_hz", env.bandwidth_hz);
  get_if_present(j, "jammer_tx_w", env.jammer_tx_w);
  get_if_present(j, "v_max_mps", env.v_max_mps);
  get_if_present(j, "z_min_m", env.z_min_m);
  get_if_present(j, "z_max_m", env.z_max_m);
  get_if_present(j, "d_min_m", env.d_min_m);
  get_if_present(j, "p_max_w", env.p_max_w);
  get_if_present(j, "secrecy_threshold_bps", env.secrecy_threshold_bps);
  get_if_present(j, "task_bits", env.task_bits);
  get_if_present(j, "energy_budget_j", env.energy_budget_j);
  get_if_present(j, "max_slots", env.max_slots);
  if (j.contains("mode")) {
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "noma") {
      env.mode = AccessMode::kNoma;
    } else if (mode == "tdma") {
      env.mode = AccessMode::kTdma;
    } else {
      throw std::invalid_argument("config: mode must be noma or tdma");
    }
  }
}

json env_to_json(const EnvConfig& env) {
  return json{
      {"layout", layout_to_json(env.layout)},
      {"channel",
       {{"eta_a", env.channel.eta_a},
        {"eta_b", env.channel.eta_b},
        {"eta_los_db", env.channel.eta_los_db},
        {"eta_nlos_db", env.channel.eta_nlos_db},
        {"carrier_hz", env.channel.carrier_hz},
        {"noise_power_s_w", env.channel.noise_power_s_w},
        {"noise_power_e_w", env.channel.noise_power_e_w}}},
      {"compute",
       {{"cycles_per_bit_user", env.compute.cycles_per_bit_user},
        {"cycles_per_bit_server", env.compute.cycles_per_bit_server},
        {"cap_user", env.compute.cap_user},
        {"cap_server", env.compute.cap_server},
        {"f_user_max_hz", env.compute.f_user_max_hz},
        {"f_server_max_hz", env.compute.f_server_max_hz},
        {"slot_s", env.compute.slot_s}}},
      {"propulsion",
       {{"blade_profile_power_w", env.propulsion.blade_profile_power_w},
        {"induced_power_w", env.propulsion.induced_power_w},
        {"tip_speed_mps", env.propulsion.tip_speed_mps},
        {"hover_induced_speed_mps", env.propulsion.hover_induced_speed_mps},
        {"fuselage_drag_ratio", env.propulsion.fuselage_drag_ratio},
        {"air_density_kg_m3", env.propulsion.air_density_kg_m3},
        {"rotor_solidity", env.propulsion.rotor_solidity},
        {"rotor_disc_area_m2", env.propulsion.rotor_disc_area_m2}}},
      {"weights",
       {{"w_energy", env.weights.w_energy},
        {"w_delay", env.weights.w_delay},
        {"unit_cost_energy", env.weights.unit_cost_energy},
        {"unit_cost_delay", env.weights.unit_cost_delay}}},
      {"reward",
       {{"kappa_f", env.reward.kappa_f},
        {"kappa_ac", env.reward.kappa_ac},
        {"kappa_rc", env.reward.kappa_rc},
        {"zeta", env.reward.zeta}}},
      {"arena", {{"x_max", env.arena.x_max}, {"y_max", env.arena.y_max}}},
      {"bandwidth_hz", env.bandwidth_hz},
      {"jammer_tx_w", env.jammer_tx_w},
      {"v_max_mps", env.v_max_mps},
      {"z_min_m", env.z_min_m},
      {"z_max_m", env.z_max_m},
      {"d_min_m", env.d_min_m},
      {"p_max_w", env.p_max_w},
      {"secrecy_threshold_bps", env.secrecy_threshold_bps},
      {"task_bits", env.task_bits},
      {"energy_budget_j", env.energy_budget_j},
      {"max_slots", env.max_slots},
      {"mode", env.mode == AccessMode::kTdma ? "tdma" : "noma"},
  };
}

void train_from_json(const json& j, TrainConfig& train) {
  get_if_present(j, "episodes", train.episodes);
  get_if_present(j, "batch", train.batch);
  get_if_present(j, "capacity", train.capacity);
  get_if_present(j, "lr_actor", train.lr_actor);
  get_if_present(j, "lr_critic", train.lr_critic);
  get_if_present(j, "soft_rate", train.soft_rate);
  get_if_present(j, "discount", train.discount);
  get_if_present(j, "seed", train.seed);
  get_if_present(j, "hidden", train.hidden);
  if (j.contains("noise")) {
    const auto& n = j.at("noise");
    get_if_present(n, "sigma_initial", train.noise.sigma_initial);
    get_if_present(n, "sigma_floor", train.noise.sigma_floor);
    get_if_present(n, "decay_fraction", train.noise.decay_fraction);
  }
}

json train_to_json(const TrainConfig& train) {
  return json{
      {"episodes", train.episodes},
      {"batch", train.batch},
      {"capacity", train.capacity},
      {"lr_actor", train.lr_actor},
      {"lr_critic", train.lr_critic},
      {"soft_rate", train.soft_rate},
      {"discount", train.discount},
      {"seed", train.seed},
      {"hidden", train.hidden},
      {"noise",
       {{"sigma_initial", train.noise.sigma_initial},
        {"sigma_floor", train.noise.sigma_floor},
        {"decay_fraction", train.noise.decay_fraction}}},
  };
}

}  // namespace

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kNoma:
      return "noma";
    case Scheme::kTdma:
      return "tdma";
    case Scheme::kLocal:
      return "local";
  }
  throw std::logic_error("config: unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "noma") return Scheme::kNoma;
  if (name == "tdma") return Scheme::kTdma;
  if (name == "local") return Scheme::kLocal;
  throw std::invalid_argument("config: scheme must be noma, tdma, or local");
}

void ExperimentConfig::validate() const {
  env.validate();
  train.validate();
  if (sweep) {
    if (!is_sweepable_key(sweep->key)) {
      throw std::invalid_argument("config: unrecognized sweep key '" + sweep->key + "'");
    }
    if (sweep->values.empty()) {
      throw std::invalid_argument("config: sweep needs at least one value");
    }
  }
  if (run_id.empty()) {
    throw std::invalid_argument("config: run_id must not be empty");
  }
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("config: malformed JSON: ") + e.what());
  }
  ExperimentConfig config;
  config.env.layout = default_layout();
  if (j.contains("env")) env_from_json(j.at("env"), config.env);
  if (j.contains("train")) train_from_json(j.at("train"), config.train);
  if (j.contains("scheme")) config.scheme = scheme_from_name(j.at("scheme").get<std::string>());
  if (j.contains("output_dir")) config.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("run_id")) config.run_id = j.at("run_id").get<std::string>();
  if (j.contains("sweep")) {
    SweepSpec spec;
    spec.key = j.at("sweep").at("key").get<std::string>();
    spec.values = j.at("sweep").at("values").get<std::vector<double>>();
    config.sweep = spec;
  }
  // The scheme decides the uplink mode of trained runs.
  if (config.scheme == Scheme::kTdma) {
    config.env.mode = AccessMode::kTdma;
  } else if (config.scheme == Scheme::kNoma) {
    config.env.mode = AccessMode::kNoma;
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

std::string experiment_config_to_json(const ExperimentConfig& config) {
  json j{
      {"env", env_to_json(config.env)},
      {"train", train_to_json(config.train)},
      {"scheme", scheme_name(config.scheme)},
      {"output_dir", config.output_dir.string()},
      {"run_id", config.run_id},
  };
  if (config.sweep) {
    j["sweep"] = {{"key", config.sweep->key}, {"values", config.sweep->values}};
  }
  return j.dump(2) + "\n";
}

bool is_sweepable_key(const std::string& key) {
  return key == "weights.w_energy" || key == "task_bits" || key == "secrecy_threshold_bps" ||
         key == "layout.eavesdropper.radius_m";
}

void apply_override(ExperimentConfig& config, const std::string& key, double value) {
  if (key == "weights.w_energy") {
    config.env.weights.w_energy = value;
    config.env.weights.w_delay = 1.0 - value;
  } else if (key == "task_bits") {
    config.env.task_bits = value;
  } else if (key == "secrecy_threshold_bps") {
    config.env.secrecy_threshold_bps = value;
  } else if (key == "layout.eavesdropper.radius_m") {
    config.env.layout.eavesdropper.radius_m = value;
  } else {
    throw std::invalid_argument("config: unrecognized override key '" + key + "'");
  }
}

bool env_configs_match(const EnvConfig& a, const EnvConfig& b) {
  json ja = env_to_json(a);
  json jb = env_to_json(b);
  ja.erase("mode");
  jb.erase("mode");
  return ja == jb;
}

}  // namespace aeromec
