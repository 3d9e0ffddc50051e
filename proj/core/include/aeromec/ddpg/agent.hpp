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

#ifndef AEROMEC_DDPG_AGENT_HPP
#define AEROMEC_DDPG_AGENT_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aeromec/ddpg/adam.hpp"
#include "aeromec/ddpg/mlp.hpp"
#include "aeromec/ddpg/replay_buffer.hpp"
#include "aeromec/env.hpp"

namespace aeromec {

/// Per-episode exploration noise: sigma decays exponentially from the
/// initial value and reaches the floor after `decay_fraction` of training.
struct NoiseSchedule {
  double sigma_initial = 0.2;
  double sigma_floor = 0.02;
  double decay_fraction = 0.8;

  double sigma_for_episode(int episode, int total_episodes) const {
    const double horizon = std::max(1.0, decay_fraction * total_episodes);
    const double rate = std::log(sigma_floor / sigma_initial) / horizon;
    return std::max(sigma_floor, sigma_initial * std::exp(rate * episode));
  }
};

struct TrainConfig {
  int episodes = 1000;
  int batch = 128;
  int capacity = 10000;
  double lr_actor = 1e-4;
  double lr_critic = 6e-4;
  double soft_rate = 1e-3;  ///< tau
  double discount = 0.99;   ///< beta
  NoiseSchedule noise;
  std::uint64_t seed = 1;
  std::vector<int> hidden = {64, 128, 256, 256, 128, 64};

  void validate() const {
    if (episodes <= 0 || batch <= 0 || capacity <= 0 || batch > capacity) {
      throw std::invalid_argument("train: need 0 < batch <= capacity and episodes > 0");
    }
    if (!(soft_rate > 0.0) || !(soft_rate < 1.0)) {
      throw std::invalid_argument("train: soft update rate must lie in (0, 1)");
    }
    if (discount < 0.0 || discount > 1.0) {
      throw std::invalid_argument("train: discount must lie in [0, 1]");
    }
    if (!(lr_actor > 0.0) || !(lr_critic > 0.0)) {
      throw std::invalid_argument("train: learning rates must be positive");
    }
    if (hidden.empty()) {
      throw std::invalid_argument("train: need at least one hidden layer");
    }
  }
};

/// What one training episode produced. Costs follow the weighted
/// energy/delay decomposition: energy_cost + delay_cost == average_cost.
struct EpisodeStats {
  int episode = 0;
  double accumulated_reward = 0.0;
  double average_cost = 0.0;
  double energy_cost = 0.0;
  double delay_cost = 0.0;
  double reward_offload = 0.0;
  double penalty_collision = 0.0;
  double penalty_capacity = 0.0;
  double penalty_leftover = 0.0;
  long collision_violations = 0;
  long capacity_violations = 0;
  int episode_slots = 0;
  double wall_time_s = 0.0;
};

/**
 * Deep deterministic policy gradient agent: actor and critic perceptrons
 * with their target copies, Adam optimizers, and a replay ring. The critic
 * consumes the concatenated (state, action) vector at its input layer.
 */
template <class Scalar>
class DdpgAgent {
 public:
  using Matrix = typename Mlp<Scalar>::Matrix;
  using Vector = typename Mlp<Scalar>::Vector;
  using Batch = typename ReplayBuffer<Scalar>::Batch;

  DdpgAgent(int state_dim, int action_dim, const TrainConfig& config)
      : state_dim_(state_dim),
        action_dim_(action_dim),
        config_(config),
        rng_(config.seed),
        buffer_(state_dim, action_dim, config.capacity) {
    config_.validate();
    std::vector<int> actor_widths;
    actor_widths.push_back(state_dim);
    actor_widths.insert(actor_widths.end(), config_.hidden.begin(), config_.hidden.end());
    actor_widths.push_back(action_dim);
    std::vector<int> critic_widths;
    critic_widths.push_back(state_dim + action_dim);
    critic_widths.insert(critic_widths.end(), config_.hidden.begin(), config_.hidden.end());
    critic_widths.push_back(1);

    actor_ = Mlp<Scalar>::random(actor_widths, Activation::kSigmoid, rng_);
    critic_ = Mlp<Scalar>::random(critic_widths, Activation::kIdentity, rng_);
    target_actor_ = actor_;
    target_critic_ = critic_;
    actor_adam_ = AdamState<Scalar>::shaped_like(actor_);
    critic_adam_ = AdamState<Scalar>::shaped_like(critic_);
  }

  int state_dim() const { return state_dim_; }
  int action_dim() const { return action_dim_; }
  const Mlp<Scalar>& actor() const { return actor_; }
  const Mlp<Scalar>& critic() const { return critic_; }
  const Mlp<Scalar>& target_actor() const { return target_actor_; }
  const Mlp<Scalar>& target_critic() const { return target_critic_; }
  Mlp<Scalar>& mutable_actor() { return actor_; }
  Mlp<Scalar>& mutable_critic() { return critic_; }
  ReplayBuffer<Scalar>& buffer() { return buffer_; }
  std::mt19937_64& rng() { return rng_; }

  /// Policy output plus zero-mean Gaussian exploration noise, clipped back
  /// into [0,1] per component.
  std::vector<Scalar> act_with_noise(std::span<const Scalar> state, double sigma) {
    if (sigma < 0.0) {
      throw std::invalid_argument("ddpg: noise sigma must be nonnegative");
    }
    std::vector<Scalar> action = greedy_action(state);
    if (sigma > 0.0) {
      std::normal_distribution<double> noise(0.0, sigma);
      for (auto& a : action) {
        a = std::clamp(a + static_cast<Scalar>(noise(rng_)), Scalar(0), Scalar(1));
      }
    }
    return action;
  }

  std::vector<Scalar> greedy_action(std::span<const Scalar> state) const {
    if (static_cast<int>(state.size()) != state_dim_) {
      throw std::invalid_argument("ddpg: state dimension mismatch");
    }
    Matrix input(state_dim_, 1);
    for (int i = 0; i < state_dim_; ++i) input(i, 0) = state[i];
    const Matrix out = actor_.forward(input);
    std::vector<Scalar> action(action_dim_);
    for (int i = 0; i < action_dim_; ++i) action[i] = out(i, 0);
    return action;
  }

  /// One critic descent step on the squared temporal-difference error
  /// against the target networks. Returns the pre-update batch loss.
  Scalar critic_update(const Batch& batch) {
    const int n = static_cast<int>(batch.rewards.size());
    const Matrix next_actions = target_actor_.forward(batch.next_states);
    const Matrix target_q =
        target_critic_.forward(stack_inputs(batch.next_states, next_actions));
    Vector targets(n);
    for (int i = 0; i < n; ++i) {
      // No bootstrap through terminal transitions.
      targets(i) = batch.rewards(i) +
                   static_cast<Scalar>(config_.discount) * (Scalar(1) - batch.done(i)) *
                       target_q(0, i);
    }

    typename Mlp<Scalar>::ForwardCache cache;
    const Matrix q = critic_.forward(stack_inputs(batch.states, batch.actions), &cache);
    Matrix dloss(1, n);
    Scalar loss = 0;
    for (int i = 0; i < n; ++i) {
      const Scalar err = q(0, i) - targets(i);
      loss += err * err;
      dloss(0, i) = Scalar(2) * err / static_cast<Scalar>(n);
    }
    loss /= static_cast<Scalar>(n);

    typename Mlp<Scalar>::Gradients grads;
    critic_.backward(cache, dloss, &grads);
    adam_step(critic_, grads, critic_adam_, static_cast<Scalar>(config_.lr_critic));
    return loss;
  }

  /// One actor ascent step on the mean critic value of the actor's own
  /// actions: the critic's action gradient is chained through the actor.
  /// Returns the pre-update mean Q.
  Scalar actor_update(const Batch& batch) {
    const int n = static_cast<int>(batch.rewards.size());
    typename Mlp<Scalar>::ForwardCache actor_cache;
    const Matrix actions = actor_.forward(batch.states, &actor_cache);

    typename Mlp<Scalar>::ForwardCache critic_cache;
    const Matrix q = critic_.forward(stack_inputs(batch.states, actions), &critic_cache);
    const Scalar mean_q = q.row(0).mean();

    Matrix dq = Matrix::Constant(1, n, Scalar(1) / static_cast<Scalar>(n));
    // Input gradients only; the critic's parameters stay fixed here.
    const Matrix dinput = critic_.backward(critic_cache, dq, nullptr);
    const Matrix daction = dinput.bottomRows(action_dim_);

    typename Mlp<Scalar>::Gradients grads;
    actor_.backward(actor_cache, daction, &grads);
    // Adam descends; negate to ascend the action value.
    for (auto& layer : grads.layers) {
      layer.weights = -layer.weights;
      layer.bias = -layer.bias;
    }
    adam_step(actor_, grads, actor_adam_, static_cast<Scalar>(config_.lr_actor));
    return mean_q;
  }

  void soft_update_targets() {
    soft_update(target_critic_, critic_, static_cast<Scalar>(config_.soft_rate));
    soft_update(target_actor_, actor_, static_cast<Scalar>(config_.soft_rate));
  }

  /// Concatenate state and action batches into the critic's input layout.
  static Matrix stack_inputs(const Matrix& states, const Matrix& actions) {
    Matrix input(states.rows() + actions.rows(), states.cols());
    input.topRows(states.rows()) = states;
    input.bottomRows(actions.rows()) = actions;
    return input;
  }

 private:
  int state_dim_;
  int action_dim_;
  TrainConfig config_;
  std::mt19937_64 rng_;
  ReplayBuffer<Scalar> buffer_;
  Mlp<Scalar> actor_;
  Mlp<Scalar> critic_;
  Mlp<Scalar> target_actor_;
  Mlp<Scalar> target_critic_;
  AdamState<Scalar> actor_adam_;
  AdamState<Scalar> critic_adam_;
};

template <class Scalar>
struct TrainResult {
  DdpgAgent<Scalar> agent;
  std::vector<EpisodeStats> episodes;
};

/// Run the full training loop: act with decaying noise, step the
/// environment, store the transition, and once the replay ring holds a
/// mini-batch run one critic update, one actor update, and one soft update
/// of both targets per slot. Episodes end when the environment reports
/// done. Deterministic for a fixed seed.
template <class Scalar>
TrainResult<Scalar> train(Environment& env, const TrainConfig& config,
                          const std::function<void(const EpisodeStats&)>& on_episode = {}) {
  config.validate();
  TrainResult<Scalar> result{
      DdpgAgent<Scalar>(static_cast<int>(env.config().state_dim()),
                        static_cast<int>(env.config().action_dim()), config),
      {}};
  auto& agent = result.agent;
  result.episodes.reserve(config.episodes);

  std::vector<Scalar> features(env.config().state_dim());
  std::vector<double> raw_action(env.config().action_dim());

  for (int episode = 0; episode < config.episodes; ++episode) {
    const double sigma = config.noise.sigma_for_episode(episode, config.episodes);
    const auto t0 = std::chrono::steady_clock::now();

    env.reset(static_cast<std::uint64_t>(episode));
    auto encoded = env.encode_state(env.state());
    for (std::size_t i = 0; i < encoded.size(); ++i) features[i] = static_cast<Scalar>(encoded[i]);

    EpisodeStats stats;
    stats.episode = episode;
    double episode_energy_j = 0.0;
    double episode_delay_s = 0.0;

    while (!env.done()) {
      const std::vector<Scalar> action = agent.act_with_noise(features, sigma);
      for (std::size_t i = 0; i < action.size(); ++i) raw_action[i] = static_cast<double>(action[i]);

      const StepOutcome outcome = env.step(raw_action);
      const auto next_encoded = env.encode_state(outcome.next_state);
      std::vector<Scalar> next_features(next_encoded.size());
      for (std::size_t i = 0; i < next_encoded.size(); ++i) {
        next_features[i] = static_cast<Scalar>(next_encoded[i]);
      }

      agent.buffer().push(features, action, static_cast<Scalar>(outcome.reward), next_features,
                          outcome.done);
      if (agent.buffer().ready(config.batch)) {
        const auto batch = agent.buffer().sample(config.batch, agent.rng());
        agent.critic_update(batch);
        agent.actor_update(batch);
        agent.soft_update_targets();
      }

      stats.accumulated_reward += outcome.reward;
      stats.reward_offload += outcome.info.reward_terms.offload;
      stats.penalty_collision += outcome.info.reward_terms.collision_penalty;
      stats.penalty_capacity += outcome.info.reward_terms.capacity_penalty;
      stats.penalty_leftover += outcome.info.reward_terms.leftover_penalty;
      stats.collision_violations += outcome.info.collision_violation ? 1 : 0;
      stats.capacity_violations += outcome.info.capacity_violation ? 1 : 0;
      episode_energy_j += outcome.info.user_energy_j;
      episode_delay_s += outcome.info.slot_delay_s;
      ++stats.episode_slots;

      features = std::move(next_features);
    }

    const auto& w = env.config().weights;
    const double k = static_cast<double>(env.config().num_users());
    stats.energy_cost = w.w_energy * w.unit_cost_energy * episode_energy_j / k;
    stats.delay_cost = w.w_delay * w.unit_cost_delay * episode_delay_s / k;
    stats.average_cost = stats.energy_cost + stats.delay_cost;
    stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (on_episode) on_episode(stats);
    result.episodes.push_back(stats);
  }
  return result;
}

}  // namespace aeromec

#endif  // AEROMEC_DDPG_AGENT_HPP
