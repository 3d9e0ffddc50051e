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

#include "aeromec/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aeromec {

namespace {
constexpr double kSpeedOfLight = 299792458.0;  // m/s
}

void ChannelParams::validate() const {
  if (!(eta_a > 0.0) || !(eta_b > 0.0)) {
    throw std::invalid_argument("channel: environment parameters must be positive");
  }
  if (!(carrier_hz > 0.0)) {
    throw std::invalid_argument("channel: carrier frequency must be positive");
  }
  if (!(noise_power_s_w > 0.0) || !(noise_power_e_w > 0.0)) {
    throw std::invalid_argument("channel: noise powers must be positive");
  }
  if (eta_nlos_db < eta_los_db) {
    throw std::invalid_argument("channel: NLoS excess loss below LoS excess loss");
  }
}

double elevation_angle_deg(double altitude_m, double distance_m) {
  if (!(distance_m > 0.0)) {
    throw std::domain_error("channel: zero distance between co-located nodes");
  }
  const double ratio = std::min(altitude_m / distance_m, 1.0);
  return 180.0 / std::numbers::pi * std::asin(ratio);
}

double los_probability_from_angle(double elevation_deg, const ChannelParams& p) {
  return 1.0 / (1.0 + p.eta_a * std::exp(-p.eta_b * (elevation_deg - p.eta_a)));
}

double los_probability(const GroundPosition& ground, const AirPosition& air,
                       const ChannelParams& p) {
  if (!(air.z > 0.0)) {
    throw std::domain_error("channel: air node must have positive altitude");
  }
  const double d = slant_distance(ground, air);
  return los_probability_from_angle(elevation_angle_deg(air.z, d), p);
}

double average_path_loss_from_distance_db(double distance_m, double altitude_m,
                                          const ChannelParams& p) {
  const double p_los = los_probability_from_angle(elevation_angle_deg(altitude_m, distance_m), p);
  const double free_space_db =
      20.0 * std::log10(distance_m) +
      20.0 * std::log10(4.0 * std::numbers::pi * p.carrier_hz / kSpeedOfLight);
  return p_los * (free_space_db + p.eta_los_db) +
         (1.0 - p_los) * (free_space_db + p.eta_nlos_db);
}

double average_path_loss_db(const GroundPosition& ground, const AirPosition& air,
                            const ChannelParams& p) {
  if (!(air.z > 0.0)) {
    throw std::domain_error("channel: air node must have positive altitude");
  }
  return average_path_loss_from_distance_db(slant_distance(ground, air), air.z, p);
}

double channel_gain(double loss_db) {
  return std::pow(10.0, -loss_db / 10.0);
}

double worst_case_distance(const GroundPosition& node, const EavesdropperRegion& region,
                           EveRole role) {
  const double to_center = horizontal_distance(node, region.center);
  const double horizontal = role == EveRole::kEavesdroppedUser
                                ? std::max(to_center - region.radius_m, 0.0)
                                : to_center + region.radius_m;
  return std::hypot(region.altitude_m, horizontal);
}

double worst_case_gain(const GroundPosition& node, const EavesdropperRegion& region,
                       EveRole role, const ChannelParams& p) {
  const double d = worst_case_distance(node, region, role);
  return channel_gain(average_path_loss_from_distance_db(d, region.altitude_m, p));
}

double center_path_loss_db(const GroundPosition& node, const EavesdropperRegion& region,
                           const ChannelParams& p) {
  const double d = std::hypot(region.altitude_m, horizontal_distance(node, region.center));
  return average_path_loss_from_distance_db(d, region.altitude_m, p);
}

}  // namespace aeromec
