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

#include "aeromec/harness/metrics.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace aeromec {

namespace {

constexpr const char* kMetricsHeader =
    "episode,accumulated_reward,average_cost,energy_cost,delay_cost,reward_offload,"
    "penalty_collision,penalty_capacity,penalty_leftover,collision_violations,"
    "capacity_violations,episode_slots";

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& field) {
  double v = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw std::runtime_error("metrics: malformed number '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("metrics: cannot open " + path.string() + " for writing");
  }
  return out;
}

}  // namespace

MetricsRecord to_metrics_record(const EpisodeStats& stats) {
  return MetricsRecord{
      .episode = stats.episode,
      .accumulated_reward = stats.accumulated_reward,
      .average_cost = stats.average_cost,
      .energy_cost = stats.energy_cost,
      .delay_cost = stats.delay_cost,
      .reward_offload = stats.reward_offload,
      .penalty_collision = stats.penalty_collision,
      .penalty_capacity = stats.penalty_capacity,
      .penalty_leftover = stats.penalty_leftover,
      .collision_violations = stats.collision_violations,
      .capacity_violations = stats.capacity_violations,
      .episode_slots = stats.episode_slots,
  };
}

void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsRecord> records) {
  auto out = open_for_write(path);
  out << kMetricsHeader << '\n';
  for (const auto& r : records) {
    out << r.episode << ',' << format_double(r.accumulated_reward) << ','
        << format_double(r.average_cost) << ',' << format_double(r.energy_cost) << ','
        << format_double(r.delay_cost) << ',' << format_double(r.reward_offload) << ','
        << format_double(r.penalty_collision) << ',' << format_double(r.penalty_capacity) << ','
        << format_double(r.penalty_leftover) << ',' << r.collision_violations << ','
        << r.capacity_violations << ',' << r.episode_slots << '\n';
  }
  if (!out) {
    throw std::runtime_error("metrics: write failed for " + path.string());
  }
}

std::vector<MetricsRecord> read_metrics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("metrics: cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != kMetricsHeader) {
    throw std::runtime_error("metrics: unexpected header in " + path.string());
  }
  std::vector<MetricsRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 12) {
      throw std::runtime_error("metrics: malformed row in " + path.string());
    }
    MetricsRecord r;
    r.episode = static_cast<int>(std::stol(fields[0]));
    r.accumulated_reward = parse_double(fields[1]);
    r.average_cost = parse_double(fields[2]);
    r.energy_cost = parse_double(fields[3]);
    r.delay_cost = parse_double(fields[4]);
    r.reward_offload = parse_double(fields[5]);
    r.penalty_collision = parse_double(fields[6]);
    r.penalty_capacity = parse_double(fields[7]);
    r.penalty_leftover = parse_double(fields[8]);
    r.collision_violations = std::stol(fields[9]);
    r.capacity_violations = std::stol(fields[10]);
    r.episode_slots = static_cast<int>(std::stol(fields[11]));
    records.push_back(r);
  }
  return records;
}

void write_metrics_jsonl(const std::filesystem::path& path,
                         std::span<const MetricsRecord> records) {
  auto out = open_for_write(path);
  for (const auto& r : records) {
    nlohmann::json j{
        {"episode", r.episode},
        {"accumulated_reward", r.accumulated_reward},
        {"average_cost", r.average_cost},
        {"energy_cost", r.energy_cost},
        {"delay_cost", r.delay_cost},
        {"reward_offload", r.reward_offload},
        {"penalty_collision", r.penalty_collision},
        {"penalty_capacity", r.penalty_capacity},
        {"penalty_leftover", r.penalty_leftover},
        {"collision_violations", r.collision_violations},
        {"capacity_violations", r.capacity_violations},
        {"episode_slots", r.episode_slots},
    };
    out << j.dump() << '\n';
  }
  if (!out) {
    throw std::runtime_error("metrics: write failed for " + path.string());
  }
}

std::vector<MetricsRecord> read_metrics_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("metrics: cannot open " + path.string());
  }
  std::vector<MetricsRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    MetricsRecord r;
    r.episode = j.at("episode").get<int>();
    r.accumulated_reward = j.at("accumulated_reward").get<double>();
    r.average_cost = j.at("average_cost").get<double>();
    r.energy_cost = j.at("energy_cost").get<double>();
    r.delay_cost = j.at("delay_cost").get<double>();
    r.reward_offload = j.at("reward_offload").get<double>();
    r.penalty_collision = j.at("penalty_collision").get<double>();
    r.penalty_capacity = j.at("penalty_capacity").get<double>();
    r.penalty_leftover = j.at("penalty_leftover").get<double>();
    r.collision_violations = j.at("collision_violations").get<long>();
    r.capacity_violations = j.at("capacity_violations").get<long>();
    r.episode_slots = j.at("episode_slots").get<int>();
    records.push_back(r);
  }
  return records;
}

void write_trajectory_csv(const std::filesystem::path& path,
                          std::span<const TrajectoryRecord> records) {
  auto out = open_for_write(path);
  const std::size_t k = records.empty() ? 0 : records.front().power_w.size();
  out << "slot,x,y,z";
  for (std::size_t i = 0; i < k; ++i) {
    out << ",power_w_" << i << ",freq_hz_" << i << ",secrecy_bps_" << i << ",remaining_bits_" << i;
  }
  out << '\n';
  for (const auto& r : records) {
    out << r.slot << ',' << format_double(r.uav_pos.x) << ',' << format_double(r.uav_pos.y) << ','
        << format_double(r.uav_pos.z);
    for (std::size_t i = 0; i < k; ++i) {
      out << ',' << format_double(r.power_w[i]) << ',' << format_double(r.freq_hz[i]) << ','
          << format_double(r.secrecy_bps[i]) << ',' << format_double(r.remaining_bits[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw std::runtime_error("metrics: write failed for " + path.string());
  }
}

double converged_cost(std::span<const MetricsRecord> records, int window) {
  if (records.empty()) {
    throw std::invalid_argument("metrics: no records to summarize");
  }
  const std::size_t n = std::min<std::size_t>(records.size(), static_cast<std::size_t>(window));
  double sum = 0.0;
  for (std::size_t i = records.size() - n; i < records.size(); ++i) {
    sum += records[i].average_cost;
  }
  return sum / static_cast<double>(n);
}

}  // namespace aeromec
