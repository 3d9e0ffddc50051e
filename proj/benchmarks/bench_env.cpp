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

#include <benchmark/benchmark.h>

#include <random>

#include "aeromec/config.hpp"
#include "aeromec/env.hpp"

namespace {

using namespace aeromec;

void BM_EnvStep(benchmark::State& state) {
  auto config = parse_experiment_config("{}").env;
  config.max_slots = 1 << 30;
  config.energy_budget_j = 1e12;
  Environment env(config);
  std::uint64_t episode = 0;
  env.reset(episode++);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> raw(config.action_dim());
  for (auto _ : state) {
    if (env.done()) env.reset(episode++);
    for (auto& v : raw) v = unit(rng);
    benchmark::DoNotOptimize(env.step(raw));
  }
}
BENCHMARK(BM_EnvStep);

void BM_EncodeState(benchmark::State& state) {
  auto config = parse_experiment_config("{}").env;
  Environment env(config);
  env.reset(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(env.encode_state(env.state()));
  }
}
BENCHMARK(BM_EncodeState);

}  // namespace
