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

#include "aeromec/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "aeromec/ddpg/checkpoint.hpp"

namespace aeromec {

namespace {

using nlohmann::json;

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("experiment: cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("experiment: write failed for " + path.string());
  }
}

/// One greedy (noise-free) episode of a trained actor.
EvalResult greedy_rollout(Environment& env, const Mlp<float>& actor) {
  EvalResult result;
  env.reset(0);
  double energy_j = 0.0;
  double delay_s = 0.0;
  while (!env.done()) {
    const AirPosition slot_pos = env.state().uav_pos;
    const auto encoded = env.encode_state(env.state());
    typename Mlp<float>::Matrix input(static_cast<Eigen::Index>(encoded.size()), 1);
    for (std::size_t i = 0; i < encoded.size(); ++i) input(static_cast<Eigen::Index>(i), 0) = static_cast<float>(encoded[i]);
    const auto out = actor.forward(input);
    std::vector<double> raw(static_cast<std::size_t>(out.rows()));
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<double>(out(static_cast<Eigen::Index>(i), 0));

    const StepOutcome outcome = env.step(raw);
    TrajectoryRecord record;
    record.slot = result.episode_slots;
    record.uav_pos = slot_pos;
    record.power_w = outcome.info.tx_power_w;
    record.freq_hz = outcome.info.cpu_freq_hz;
    record.secrecy_bps = outcome.info.secrecy_rate_bps;
    record.remaining_bits = outcome.next_state.per_user_remaining_bits;
    result.trajectory.push_back(std::move(record));

    result.accumulated_reward += outcome.reward;
    energy_j += outcome.info.user_energy_j;
    delay_s += outcome.info.slot_delay_s;
    ++result.episode_slots;
  }
  result.episode_cost = episode_cost(energy_j, delay_s, env.config().weights,
                                     env.config().num_users());
  result.completed_all_tasks = true;
  for (double bits : env.state().per_user_remaining_bits) {
    result.completed_all_tasks = result.completed_all_tasks && bits <= 0.0;
  }
  return result;
}

void write_run_info(const std::filesystem::path& dir, const RunArtifacts& artifacts,
                    const ExperimentConfig& config) {
  json info{
      {"run_id", artifacts.run_id},
      {"scheme", scheme_name(artifacts.scheme)},
      {"seed", artifacts.seed},
      {"episodes", artifacts.metrics.size()},
      {"converged_cost", artifacts.converged_cost},
      {"wall_time_s", artifacts.wall_time_s},
  };
  if (config.scheme == Scheme::kLocal) {
    const LocalCost local = local_only_cost(config.env);
    info["local_delay_per_user_s"] = local.delay_per_user_s;
    info["local_energy_per_user_j"] = local.energy_per_user_j;
  }
  write_text_file(dir / "run.json", info.dump(2) + "\n");
}

}  // namespace

LocalCost local_only_cost(const EnvConfig& env) {
  env.validate();
  LocalCost result;
  result.delay_per_user_s = env.task_bits * env.compute.cycles_per_bit_user / env.compute.f_user_max_hz;
  const double f = env.compute.f_user_max_hz;
  result.energy_per_user_j = env.compute.cap_user * f * f * f * result.delay_per_user_s;
  const double k = static_cast<double>(env.num_users());
  result.average_cost = episode_cost(k * result.energy_per_user_j, k * result.delay_per_user_s,
                                     env.weights, env.num_users());
  return result;
}

RunArtifacts run_single(const ExperimentConfig& raw_config) {
  ExperimentConfig config = raw_config;
  if (config.scheme == Scheme::kTdma) {
    config.env.mode = AccessMode::kTdma;
  } else if (config.scheme == Scheme::kNoma) {
    config.env.mode = AccessMode::kNoma;
  }
  config.validate();

  const auto t0 = std::chrono::steady_clock::now();
  const std::filesystem::path run_dir = config.output_dir / config.run_id;
  std::filesystem::create_directories(run_dir);
  write_text_file(run_dir / "config.json", experiment_config_to_json(config));

  RunArtifacts artifacts;
  artifacts.run_dir = run_dir;
  artifacts.run_id = config.run_id;
  artifacts.scheme = config.scheme;
  artifacts.seed = config.train.seed;

  if (config.scheme == Scheme::kLocal) {
    const LocalCost local = local_only_cost(config.env);
    MetricsRecord record;
    record.episode = 0;
    record.average_cost = local.average_cost;
    record.energy_cost = config.env.weights.w_energy * config.env.weights.unit_cost_energy *
                         local.energy_per_user_j;
    record.delay_cost = config.env.weights.w_delay * config.env.weights.unit_cost_delay *
                        local.delay_per_user_s;
    record.episode_slots =
        static_cast<int>(std::ceil(local.delay_per_user_s / config.env.compute.slot_s));
    artifacts.metrics.push_back(record);
  } else {
    Environment env(config.env);
    auto result = train<float>(env, config.train);
    artifacts.metrics.reserve(result.episodes.size());
    for (const auto& stats : result.episodes) {
      artifacts.metrics.push_back(to_metrics_record(stats));
    }
    save_checkpoint<float>(run_dir / "checkpoint.bin",
                           {{"actor", &result.agent.actor()},
                            {"critic", &result.agent.critic()},
                            {"target_actor", &result.agent.target_actor()},
                            {"target_critic", &result.agent.target_critic()}});
    Environment eval_env(config.env);
    const EvalResult eval = greedy_rollout(eval_env, result.agent.actor());
    write_trajectory_csv(run_dir / "trajectory.csv", eval.trajectory);
  }

  write_metrics_csv(run_dir / "metrics.csv", artifacts.metrics);
  write_metrics_jsonl(run_dir / "metrics.jsonl", artifacts.metrics);
  artifacts.converged_cost = converged_cost(artifacts.metrics);
  artifacts.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_run_info(run_dir, artifacts, config);
  return artifacts;
}

std::vector<RunArtifacts> run_sweep(const ExperimentConfig& config) {
  if (!config.sweep) {
    throw std::invalid_argument("experiment: run_sweep called without a sweep spec");
  }
  config.validate();
  const std::string leaf = config.sweep->key.substr(config.sweep->key.find_last_of('.') + 1);
  std::vector<RunArtifacts> artifacts;
  artifacts.reserve(config.sweep->values.size());
  for (double value : config.sweep->values) {
    ExperimentConfig point = config;
    point.sweep.reset();
    apply_override(point, config.sweep->key, value);
    std::ostringstream id;
    id << config.run_id << '_' << leaf << '=' << value;
    point.run_id = id.str();
    artifacts.push_back(run_single(point));
  }
  return artifacts;
}

std::vector<RunArtifacts> run_experiment(const ExperimentConfig& config) {
  if (config.sweep) {
    return run_sweep(config);
  }
  return {run_single(config)};
}

EvalResult evaluate_checkpoint(const EnvConfig& env_config,
                               const std::filesystem::path& checkpoint_path) {
  auto nets = load_checkpoint<float>(checkpoint_path);
  const auto it = nets.find("actor");
  if (it == nets.end()) {
    throw std::runtime_error("experiment: checkpoint has no actor network");
  }
  Environment env(env_config);
  if (it->second.input_size() != static_cast<int>(env_config.state_dim()) ||
      it->second.output_size() != static_cast<int>(env_config.action_dim())) {
    throw std::runtime_error("experiment: checkpoint does not fit this environment");
  }
  return greedy_rollout(env, it->second);
}

std::vector<SchemeSummary> compare_runs(const std::vector<std::filesystem::path>& run_dirs) {
  if (run_dirs.size() < 2) {
    throw std::invalid_argument("experiment: comparison needs at least two runs");
  }
  std::vector<SchemeSummary> summaries;
  ExperimentConfig reference;
  for (std::size_t i = 0; i < run_dirs.size(); ++i) {
    const auto config = load_experiment_config(run_dirs[i] / "config.json");
    if (i == 0) {
      reference = config;
    } else if (!env_configs_match(reference.env, config.env)) {
      throw std::runtime_error("experiment: run '" + config.run_id +
                               "' was produced under a different environment configuration");
    }
    const auto metrics = read_metrics_csv(run_dirs[i] / "metrics.csv");
    summaries.push_back(SchemeSummary{
        .run_id = config.run_id,
        .scheme = config.scheme,
        .seed = config.train.seed,
        .converged_cost = converged_cost(metrics),
    });
  }
  std::sort(summaries.begin(), summaries.end(),
            [](const SchemeSummary& a, const SchemeSummary& b) {
              return a.converged_cost < b.converged_cost;
            });
  return summaries;
}

std::string format_comparison(const std::vector<SchemeSummary>& summaries) {
  std::ostringstream out;
  out << "run_id                          scheme  seed      converged_cost\n";
  for (const auto& s : summaries) {
    out << s.run_id;
    for (std::size_t pad = s.run_id.size(); pad < 32; ++pad) out << ' ';
    std::string scheme = scheme_name(s.scheme);
    out << scheme;
    for (std::size_t pad = scheme.size(); pad < 8; ++pad) out << ' ';
    const std::string seed = std::to_string(s.seed);
    out << seed;
    for (std::size_t pad = seed.size(); pad < 10; ++pad) out << ' ';
    out << s.converged_cost << '\n';
  }
  return out.str();
}

}  // namespace aeromec
