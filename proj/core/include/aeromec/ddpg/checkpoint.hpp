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

#ifndef AEROMEC_DDPG_CHECKPOINT_HPP
#define AEROMEC_DDPG_CHECKPOINT_HPP

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aeromec/ddpg/mlp.hpp"

namespace aeromec {

// Self-describing binary network checkpoint. Layout (little endian):
//   magic "AMCK" | u32 version | u8 sizeof(Scalar) | u32 net count
//   per net: u32 name length | name bytes | u8 output activation |
//            u32 layer count | per layer: u32 in, u32 out,
//            raw weights (column-major), raw bias
// Raw scalar bytes round-trip bit-exactly.

inline constexpr std::uint32_t kCheckpointVersion = 1;
inline constexpr char kCheckpointMagic[4] = {'A', 'M', 'C', 'K'};

namespace detail {

template <class T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) {
    throw std::runtime_error("checkpoint: truncated file");
  }
  return value;
}

}  // namespace detail

template <class Scalar>
void save_checkpoint(const std::filesystem::path& path,
                     const std::vector<std::pair<std::string, const Mlp<Scalar>*>>& nets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("checkpoint: cannot open " + path.string() + " for writing");
  }
  out.write(kCheckpointMagic, sizeof(kCheckpointMagic));
  detail::write_pod(out, kCheckpointVersion);
  detail::write_pod(out, static_cast<std::uint8_t>(sizeof(Scalar)));
  detail::write_pod(out, static_cast<std::uint32_t>(nets.size()));
  for (const auto& [name, net] : nets) {
    detail::write_pod(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    detail::write_pod(out, static_cast<std::uint8_t>(net->output_activation()));
    detail::write_pod(out, static_cast<std::uint32_t>(net->num_layers()));
    for (const auto& layer : net->layers()) {
      detail::write_pod(out, static_cast<std::uint32_t>(layer.weights.cols()));
      detail::write_pod(out, static_cast<std::uint32_t>(layer.weights.rows()));
      out.write(reinterpret_cast<const char*>(layer.weights.data()),
                static_cast<std::streamsize>(sizeof(Scalar) * layer.weights.size()));
      out.write(reinterpret_cast<const char*>(layer.bias.data()),
                static_cast<std::streamsize>(sizeof(Scalar) * layer.bias.size()));
    }
  }
  if (!out) {
    throw std::runtime_error("checkpoint: write failed for " + path.string());
  }
}

template <class Scalar>
std::map<std::string, Mlp<Scalar>> load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("checkpoint: cannot open " + path.string());
  }
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kCheckpointMagic, sizeof(magic)) != 0) {
    throw std::runtime_error("checkpoint: bad magic in " + path.string());
  }
  const auto version = detail::read_pod<std::uint32_t>(in);
  if (version != kCheckpointVersion) {
    throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version));
  }
  const auto scalar_size = detail::read_pod<std::uint8_t>(in);
  if (scalar_size != sizeof(Scalar)) {
    throw std::runtime_error("checkpoint: scalar width mismatch");
  }
  const auto net_count = detail::read_pod<std::uint32_t>(in);
  std::map<std::string, Mlp<Scalar>> nets;
  for (std::uint32_t n = 0; n < net_count; ++n) {
    const auto name_len = detail::read_pod<std::uint32_t>(in);
    std::string name(name_len, '\0');
    in.read(name.data(), name_len);
    const auto activation = static_cast<Activation>(detail::read_pod<std::uint8_t>(in));
    const auto layer_count = detail::read_pod<std::uint32_t>(in);
    std::vector<typename Mlp<Scalar>::Layer> layers(layer_count);
    for (auto& layer : layers) {
      const auto in_w = detail::read_pod<std::uint32_t>(in);
      const auto out_w = detail::read_pod<std::uint32_t>(in);
      layer.weights.resize(out_w, in_w);
      layer.bias.resize(out_w);
      in.read(reinterpret_cast<char*>(layer.weights.data()),
              static_cast<std::streamsize>(sizeof(Scalar) * layer.weights.size()));
      in.read(reinterpret_cast<char*>(layer.bias.data()),
              static_cast<std::streamsize>(sizeof(Scalar) * layer.bias.size()));
      if (!in) {
        throw std::runtime_error("checkpoint: truncated layer data");
      }
    }
    nets.emplace(std::move(name), Mlp<Scalar>::from_layers(std::move(layers), activation));
  }
  return nets;
}

}  // namespace aeromec

#endif  // AEROMEC_DDPG_CHECKPOINT_HPP
