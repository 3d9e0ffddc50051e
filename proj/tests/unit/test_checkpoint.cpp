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

#include "aeromec/ddpg/checkpoint.hpp"

#include <doctest.h>
#include <fstream>
#include <random>

using namespace aeromec;

namespace {
std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}
}  // namespace

TEST_CASE("checkpoints round-trip bit-exactly") {
  std::mt19937_64 rng(21);
  const int actor_widths[] = {23, 16, 13};
  const int critic_widths[] = {36, 16, 1};
  const auto actor = Mlp<float>::random(actor_widths, Activation::kSigmoid, rng);
  const auto critic = Mlp<float>::random(critic_widths, Activation::kIdentity, rng);
  const auto path = temp_file("aeromec_ckpt_test.bin");
  save_checkpoint<float>(path, {{"actor", &actor}, {"critic", &critic}});

  const auto loaded = load_checkpoint<float>(path);
  REQUIRE(loaded.size() == 2);
  REQUIRE(loaded.count("actor") == 1);
  const auto& actor2 = loaded.at("actor");
  CHECK(actor2.output_activation() == Activation::kSigmoid);
  REQUIRE(actor2.num_layers() == actor.num_layers());
  for (std::size_t i = 0; i < actor.num_layers(); ++i) {
    CHECK(actor2.layers()[i].weights == actor.layers()[i].weights);
    CHECK(actor2.layers()[i].bias == actor.layers()[i].bias);
  }
  CHECK(loaded.at("critic").output_activation() == Activation::kIdentity);

  // Writing the same nets again produces identical bytes.
  const auto path2 = temp_file("aeromec_ckpt_test2.bin");
  save_checkpoint<float>(path2, {{"actor", &actor}, {"critic", &critic}});
  std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
  const std::string bytes_a((std::istreambuf_iterator<char>(a)), {});
  const std::string bytes_b((std::istreambuf_iterator<char>(b)), {});
  CHECK(bytes_a == bytes_b);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("corrupted and mismatched checkpoints are rejected") {
  const auto path = temp_file("aeromec_ckpt_bad.bin");
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOPE this is not a checkpoint";
  }
  CHECK_THROWS_AS(load_checkpoint<float>(path), std::runtime_error);

  std::mt19937_64 rng(22);
  const int widths[] = {4, 3};
  const auto net = Mlp<float>::random(widths, Activation::kSigmoid, rng);
  save_checkpoint<float>(path, {{"actor", &net}});
  // Scalar width mismatch: saved as float, loaded as double.
  CHECK_THROWS_AS(load_checkpoint<double>(path), std::runtime_error);
  CHECK_THROWS_AS(load_checkpoint<float>("/nonexistent/dir/ckpt.bin"), std::runtime_error);
  std::filesystem::remove(path);
}
