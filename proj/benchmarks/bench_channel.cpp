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

#include "aeromec/channel.hpp"

namespace {

using namespace aeromec;

void BM_AveragePathLoss(benchmark::State& state) {
  const ChannelParams params;
  const GroundPosition user{150.0, 300.0};
  AirPosition uav{0.0, 250.0, 100.0};
  for (auto _ : state) {
    uav.x += 1e-9;  // defeat value caching across iterations
    benchmark::DoNotOptimize(average_path_loss_db(user, uav, params));
  }
}
BENCHMARK(BM_AveragePathLoss);

void BM_WorstCaseGain(benchmark::State& state) {
  const ChannelParams params;
  const EavesdropperRegion region{{290.0, 150.0}, 25.0, 100.0};
  GroundPosition user{150.0, 300.0};
  for (auto _ : state) {
    user.x += 1e-9;
    benchmark::DoNotOptimize(
        worst_case_gain(user, region, EveRole::kEavesdroppedUser, params));
  }
}
BENCHMARK(BM_WorstCaseGain);

}  // namespace
