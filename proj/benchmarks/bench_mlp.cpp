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

// Wall-time per update is expected to scale linearly in the mini-batch size
// and in the sum of adjacent layer-width products; the _BatchSize and
// _NetworkSize benchmarks chart both axes.

#include <benchmark/benchmark.h>

#include <random>

#include "aeromec/ddpg/agent.hpp"

namespace {

using namespace aeromec;

typename ReplayBuffer<float>::Batch random_batch(int state_dim, int action_dim, int n,
                                                 std::mt19937_64& rng) {
  typename ReplayBuffer<float>::Batch batch;
  std::uniform_real_distribution<float> unit(0.0F, 1.0F);
  batch.states.resize(state_dim, n);
  batch.actions.resize(action_dim, n);
  batch.next_states.resize(state_dim, n);
  batch.rewards.resize(n);
  batch.done.resize(n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < state_dim; ++r) {
      batch.states(r, c) = unit(rng);
      batch.next_states(r, c) = unit(rng);
    }
    for (int r = 0; r < action_dim; ++r) batch.actions(r, c) = unit(rng);
    batch.rewards(c) = unit(rng);
    batch.done(c) = 0.0F;
  }
  return batch;
}

void BM_UpdateStep_BatchSize(benchmark::State& state) {
  const int batch_size = static_cast<int>(state.range(0));
  TrainConfig config;
  config.batch = batch_size;
  config.capacity = 16384;
  DdpgAgent<float> agent(23, 13, config);
  std::mt19937_64 rng(1);
  const auto batch = random_batch(23, 13, batch_size, rng);
  for (auto _ : state) {
    agent.critic_update(batch);
    agent.actor_update(batch);
    agent.soft_update_targets();
  }
  state.SetItemsProcessed(state.iterations() * batch_size);
}
BENCHMARK(BM_UpdateStep_BatchSize)->Arg(32)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_UpdateStep_NetworkSize(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  TrainConfig config;
  config.batch = 128;
  config.capacity = 16384;
  config.hidden = {width, width, width};
  DdpgAgent<float> agent(23, 13, config);
  std::mt19937_64 rng(1);
  const auto batch = random_batch(23, 13, 128, rng);
  for (auto _ : state) {
    agent.critic_update(batch);
    agent.actor_update(batch);
    agent.soft_update_targets();
  }
}
BENCHMARK(BM_UpdateStep_NetworkSize)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_ActorForward(benchmark::State& state) {
  TrainConfig config;
  DdpgAgent<float> agent(23, 13, config);
  std::vector<float> features(23, 0.5F);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agent.greedy_action(features));
  }
}
BENCHMARK(BM_ActorForward);

}  // namespace
