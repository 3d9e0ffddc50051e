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

// Experiment runner for the secure aerial offloading simulator.
//
//   aeromec train   --config cfg.json --scheme noma --seed 1 --out runs/
//   aeromec eval    --config cfg.json --checkpoint runs/a/checkpoint.bin --out eval/
//   aeromec sweep   --config cfg.json --sweep weights.w_energy=0.2,0.5,0.8 --out runs/
//   aeromec compare runs/a runs/b runs/c

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aeromec/config.hpp"
#include "aeromec/harness/experiment.hpp"

namespace {

using namespace aeromec;

struct CommonFlags {
  std::string config_path;
  std::string scheme;
  std::optional<std::uint64_t> seed;
  std::optional<int> episodes;
  std::string out_dir;
  std::string run_id;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* config = cmd->add_option("--config", flags.config_path, "experiment configuration (JSON)");
  if (config_required) config->required();
  cmd->add_option("--scheme", flags.scheme, "noma, tdma, or local")
      ->check(CLI::IsMember({"noma", "tdma", "local"}));
  cmd->add_option("--seed", flags.seed, "training seed");
  cmd->add_option("--episodes", flags.episodes, "number of training episodes");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--run-id", flags.run_id, "run identifier (directory name)");
}

ExperimentConfig resolve_config(const CommonFlags& flags) {
  ExperimentConfig config = flags.config_path.empty()
                                ? parse_experiment_config("{}")
                                : load_experiment_config(flags.config_path);
  if (!flags.scheme.empty()) config.scheme = scheme_from_name(flags.scheme);
  if (flags.seed) config.train.seed = *flags.seed;
  if (flags.episodes) config.train.episodes = *flags.episodes;
  if (!flags.out_dir.empty()) config.output_dir = flags.out_dir;
  if (!flags.run_id.empty()) config.run_id = flags.run_id;
  return config;
}

SweepSpec parse_sweep_flag(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("--sweep expects key=v1,v2,...");
  }
  SweepSpec spec;
  spec.key = text.substr(0, eq);
  std::istringstream values(text.substr(eq + 1));
  std::string item;
  while (std::getline(values, item, ',')) {
    spec.values.push_back(std::stod(item));
  }
  if (spec.values.empty()) {
    throw std::invalid_argument("--sweep needs at least one value");
  }
  return spec;
}

void report_run(const RunArtifacts& artifacts) {
  std::cout << "run " << artifacts.run_id << " (" << scheme_name(artifacts.scheme)
            << ", seed " << artifacts.seed << "): converged cost " << artifacts.converged_cost
            << ", " << artifacts.metrics.size() << " episodes, " << artifacts.wall_time_s
            << " s -> " << artifacts.run_dir.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure NOMA aerial MEC offloading: training and evaluation harness"};
  app.require_subcommand(1);

  CommonFlags train_flags;
  auto* train_cmd = app.add_subcommand("train", "train one scheme and export metrics");
  add_common(train_cmd, train_flags, /*config_required=*/false);

  CommonFlags eval_flags;
  std::string checkpoint_path;
  auto* eval_cmd = app.add_subcommand("eval", "greedy rollout of a trained checkpoint");
  add_common(eval_cmd, eval_flags, /*config_required=*/false);
  eval_cmd->add_option("--checkpoint", checkpoint_path, "checkpoint file")->required();

  CommonFlags sweep_flags;
  std::string sweep_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a one-parameter grid");
  add_common(sweep_cmd, sweep_flags, /*config_required=*/false);
  sweep_cmd->add_option("--sweep", sweep_text, "key=v1,v2,... over a recognized config key")
      ->required();

  std::vector<std::string> compare_dirs;
  auto* compare_cmd = app.add_subcommand("compare", "summarize finished runs");
  compare_cmd->add_option("runs", compare_dirs, "run directories")->expected(-1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train_cmd) {
      const auto artifacts = run_single(resolve_config(train_flags));
      report_run(artifacts);
    } else if (*eval_cmd) {
      auto config = resolve_config(eval_flags);
      const auto result = evaluate_checkpoint(config.env, checkpoint_path);
      std::cout << "eval: cost " << result.episode_cost << ", reward "
                << result.accumulated_reward << ", " << result.episode_slots << " slots, tasks "
                << (result.completed_all_tasks ? "completed" : "incomplete") << '\n';
      if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        write_trajectory_csv(config.output_dir / (config.run_id + "_trajectory.csv"),
                             result.trajectory);
      }
    } else if (*sweep_cmd) {
      auto config = resolve_config(sweep_flags);
      config.sweep = parse_sweep_flag(sweep_text);
      const auto artifacts = run_sweep(config);
      for (const auto& a : artifacts) report_run(a);
    } else if (*compare_cmd) {
      std::vector<std::filesystem::path> dirs(compare_dirs.begin(), compare_dirs.end());
      const auto summaries = compare_runs(dirs);
      std::cout << format_comparison(summaries);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
