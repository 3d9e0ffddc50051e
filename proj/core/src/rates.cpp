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

#include "aeromec/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace aeromec {

namespace {

void check_user_index(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers) {
  if (k >= links.num_users() || k >= powers.user_tx_w.size()) {
    throw std::out_of_range("rates: user index outside snapshot");
  }
}

double log2_rate(double bandwidth_hz, double sinr) {
  return bandwidth_hz * std::log2(1.0 + sinr);
}

}  // namespace

int sic_indicator(std::size_t k, double loss_k_db, std::size_t l, double loss_l_db) {
  if (loss_k_db < loss_l_db) return 1;
  if (loss_k_db > loss_l_db) return 0;
  return k < l ? 1 : 0;
}

double server_sinr(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                   const ChannelParams& p) {
  check_user_index(k, links, powers);
  double interference = 0.0;
  for (std::size_t l = 0; l < links.num_users(); ++l) {
    if (l == k) continue;
    if (sic_indicator(k, links.loss_to_server_db[k], l, links.loss_to_server_db[l]) == 1) {
      interference += links.gain_to_server[l] * powers.user_tx_w[l];
    }
  }
  return links.gain_to_server[k] * powers.user_tx_w[k] / (interference + p.noise_power_s_w);
}

double server_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                   const ChannelParams& p, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("rates: bandwidth must be positive");
  }
  return log2_rate(bandwidth_hz, server_sinr(k, links, powers, p));
}

double eavesdropper_rate_upper_bound(std::size_t k, const LinkSnapshot& links,
                                     const PowerAllocation& powers, const ChannelParams& p,
                                     double bandwidth_hz) {
  check_user_index(k, links, powers);
  // Interfering set at E: users whose center-ordering loss is no better
  // than user k's. Ties (z != k) interfere in both directions.
  double interference = links.jammer_gain_to_eve_lb * powers.jammer_tx_w;
  for (std::size_t z = 0; z < links.num_users(); ++z) {
    if (z == k) continue;
    if (links.loss_to_eve_db[z] >= links.loss_to_eve_db[k]) {
      interference += links.worst_interferer_gain_to_eve[z] * powers.user_tx_w[z];
    }
  }
  const double sinr =
      links.worst_gain_to_eve[k] * powers.user_tx_w[k] / (interference + p.noise_power_e_w);
  return log2_rate(bandwidth_hz, sinr);
}

double secrecy_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                    const ChannelParams& p, double bandwidth_hz) {
  const double legit = server_rate(k, links, powers, p, bandwidth_hz);
  const double eve = eavesdropper_rate_upper_bound(k, links, powers, p, bandwidth_hz);
  return std::max(legit - eve, 0.0);
}

double tdma_secrecy_rate(std::size_t k, const LinkSnapshot& links, const PowerAllocation& powers,
                         const ChannelParams& p, double bandwidth_hz, std::size_t num_users) {
  if (num_users < 1) {
    throw std::invalid_argument("rates: TDMA needs at least one user");
  }
  check_user_index(k, links, powers);
  const double pk = powers.user_tx_w[k];
  const double legit = std::log2(1.0 + links.gain_to_server[k] * pk / p.noise_power_s_w);
  const double eve = std::log2(
      1.0 + links.worst_gain_to_eve[k] * pk /
                (links.jammer_gain_to_eve_lb * powers.jammer_tx_w + p.noise_power_e_w));
  return std::max(bandwidth_hz / static_cast<double>(num_users) * (legit - eve), 0.0);
}

}  // namespace aeromec
