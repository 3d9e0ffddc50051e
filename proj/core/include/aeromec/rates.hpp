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

#ifndef AEROMEC_RATES_HPP
#define AEROMEC_RATES_HPP

#include <cstddef>
#include <vector>

#include "aeromec/channel.hpp"

namespace aeromec {

/**
 * Per-slot link state for the uplink rate computations.
 *
 * Gains toward the server are exact; gains toward the eavesdropper are the
 * extremal values over the uncertainty disk: the eavesdropped user's gain is
 * an upper bound (shortest distance) while interferer and jammer gains are
 * lower bounds (longest distance), so every rate built from them bounds the
 * true eavesdropping rate from above.
 */
struct LinkSnapshot {
  std::vector<double> gain_to_server;                ///< h_k toward the server
  std::vector<double> worst_gain_to_eve;             ///< per-user upper-bound gain at E
  std::vector<double> worst_interferer_gain_to_eve;  ///< per-user lower-bound gain at E
  double jammer_gain_to_eve_lb = 0.0;                ///< lower-bound jammer gain at E
  std::vector<double> loss_to_server_db;             ///< decoding-order metric at the server
  std::vector<double> loss_to_eve_db;                ///< decoding-order metric at E (disk center)

  std::size_t num_users() const { return gain_to_server.size(); }
};

/// Transmit powers for one slot.
struct PowerAllocation {
  std::vector<double> user_tx_w;
  double jammer_tx_w = 0.0;
};

/// Successive-interference-cancellation order indicator: 1 when user k's
/// uplink is the stronger of the pair (lower path loss), 0 otherwise.
/// Equal losses are broken deterministically by index, the lower index
/// counting as stronger, so the indicator and its swapped call always sum
/// to 1 for distinct users.
int sic_indicator(std::size_t k, double loss_k_db, std::size_t l, double loss_l_db);

/// Uplink SINR of user k at the server. Users decoded later (weaker links)
/// interfere with user k; the jammer's artificial noise is known to the
/// server and cancelled.
double server_sinr(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                   const ChannelParams& p);

/// Achievable offloading rate of user k at the server, bits/s.
double server_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                   const ChannelParams& p, double bandwidth_hz);

/// Upper bound on the rate the eavesdropper can intercept from user k,
/// bits/s. Interference comes from the jammer plus every user whose
/// ordering metric at E is weaker than user k's.
double eavesdropper_rate_upper_bound(std::size_t k, const LinkSnapshot& links,
                                     const PowerAllocation& powers, const ChannelParams& p,
                                     double bandwidth_hz);

/// Worst-case secrecy offloading rate of user k, bits/s, clamped at zero.
double secrecy_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                    const ChannelParams& p, double bandwidth_hz);

/// Secrecy offloading rate of user k under the TDMA benchmark: each user
/// gets a 1/K share of the band, no co-channel interference at either the
/// server or the eavesdropper. Clamped at zero like the NOMA rate.
double tdma_secrecy_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                         const ChannelParams& p, double bandwidth_hz, std::size_t num_users);

}  // namespace aeromec

#endif  // AEROMEC_RATES_HPP
