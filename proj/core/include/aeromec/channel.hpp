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

#ifndef AEROMEC_CHANNEL_HPP
#define AEROMEC_CHANNEL_HPP

#include "aeromec/geometry.hpp"

namespace aeromec {

/**
 * Parameters of the probabilistic LoS air-ground propagation model.
 *
 * The LoS probability is an elevation-angle logistic with environment
 * parameters eta_a and eta_b; the average path loss blends free-space loss
 * plus the LoS excess with free-space loss plus the NLoS excess, weighted by
 * that probability.
 */
struct ChannelParams {
  double eta_a = 12.08;          ///< environment parameter (dimensionless)
  double eta_b = 0.11;           ///< environment parameter (dimensionless)
  double eta_los_db = 1.6;       ///< excess loss on LoS links (dB)
  double eta_nlos_db = 23.0;     ///< excess loss on NLoS links (dB)
  double carrier_hz = 2.0e9;     ///< carrier frequency (Hz)
  double noise_power_s_w = 1e-13;  ///< AWGN power at the aerial server (W), -100 dBm
  double noise_power_e_w = 1e-13;  ///< AWGN power at the eavesdropper (W), -100 dBm

  /// Throws std::invalid_argument when a field is out of its domain.
  void validate() const;
};

/// Which bound of the eavesdropper uncertainty disk a link should be
/// evaluated at. The link that carries the eavesdropped signal is scaled to
/// its shortest possible distance; links that only interfere at the
/// eavesdropper (other users, the jammer) are scaled to their longest.
enum class EveRole {
  kEavesdroppedUser,
  kInterfererOrJammer,
};

/// Elevation angle in degrees of an air node seen from distance
/// `distance_m` with altitude difference `altitude_m`.
double elevation_angle_deg(double altitude_m, double distance_m);

/// LoS probability as a function of the elevation angle in degrees.
double los_probability_from_angle(double elevation_deg, const ChannelParams& p);

/// LoS probability between a ground node and an air node.
/// Throws std::domain_error when the nodes are co-located.
double los_probability(const GroundPosition& ground, const AirPosition& air,
                       const ChannelParams& p);

/// Average path loss in dB at slant distance `distance_m` with the air node
/// `altitude_m` above the ground node's plane. This is the primitive the
/// worst-case bounds feed: the elevation angle is derived from
/// (altitude, distance) so a scaled distance also scales the LoS mix.
double average_path_loss_from_distance_db(double distance_m, double altitude_m,
                                          const ChannelParams& p);

/// Average path loss in dB between a ground node and an air node.
double average_path_loss_db(const GroundPosition& ground, const AirPosition& air,
                            const ChannelParams& p);

/// Linear power gain corresponding to a path loss in dB.
double channel_gain(double loss_db);

/// Extremal slant distance between `node` and any eavesdropper position in
/// `region`, by the triangle inequality on the horizontal plane:
/// the eavesdropped user's distance is lower-bounded, an interferer's (or the
/// jammer's) distance is upper-bounded. The horizontal term is clamped at
/// zero so the lower bound stays valid when `node` lies inside the disk.
double worst_case_distance(const GroundPosition& node, const EavesdropperRegion& region,
                           EveRole role);

/// Channel gain at the worst-case distance, with the elevation angle taken
/// from the region altitude and that bound distance.
double worst_case_gain(const GroundPosition& node, const EavesdropperRegion& region,
                       EveRole role, const ChannelParams& p);

/// Average path loss in dB from `node` to the disk center at the region
/// altitude. Used as the deterministic ordering metric for decoding sets at
/// the eavesdropper, whose exact position is unknown.
double center_path_loss_db(const GroundPosition& node, const EavesdropperRegion& region,
                           const ChannelParams& p);

}  // namespace aeromec

#endif  // AEROMEC_CHANNEL_HPP
