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

#ifndef AEROMEC_GEOMETRY_HPP
#define AEROMEC_GEOMETRY_HPP

#include <cmath>

namespace aeromec {

/// Planar position of a terrestrial node (user or jammer), in meters.
struct GroundPosition {
  double x = 0.0;
  double y = 0.0;
};

/// 3D position of an airborne node, in meters. Altitude must be positive.
struct AirPosition {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Horizontal uncertainty disk the eavesdropper is known to lie in, at a
/// fixed operating altitude.
struct EavesdropperRegion {
  GroundPosition center;
  double radius_m = 0.0;
  double altitude_m = 0.0;
};

inline double horizontal_distance(const GroundPosition& a, const GroundPosition& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double horizontal_distance(const GroundPosition& a, const AirPosition& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Slant (3D) distance between a ground node and an air node.
inline double slant_distance(const GroundPosition& ground, const AirPosition& air) {
  return std::hypot(ground.x - air.x, ground.y - air.y, air.z);
}

inline double distance3(const AirPosition& a, const AirPosition& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

}  // namespace aeromec

#endif  // AEROMEC_GEOMETRY_HPP
