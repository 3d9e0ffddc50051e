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

#include "aeromec/ddpg/agent.hpp"

#include <cmath>
#include <doctest.h>
#include <numeric>

using namespace aeromec;

namespace {

TrainConfig tiny_config() {
  TrainConfig config;
  config.hidden = {2};
  config.batch = 4;
  config.capacity = 16;
  config.seed = 1;
  return config;
}

// Critic computing Q(s, a) = -|a - 0.7| exactly via two rectifier units.
template <class Scalar>
void install_absolute_value_critic(DdpgAgent<Scalar>& agent) {
  auto& critic = agent.mutable_critic();
  auto& l0 = critic.layers()[0];
  l0.weights.setZero();
  l0.weights(0, 1) = Scalar(1);   // a - 0.7
  l0.weights(1, 1) = Scalar(-1);  // 0.7 - a
  l0.bias << Scalar(-0.7), Scalar(0.7);
  auto& l1 = critic.layers()[1];
  l1.weights << Scalar(-1), Scalar(-1);
  l1.bias.setZero();
}

}  // namespace

TEST_CASE("noise-free acting is the deterministic policy") {
  DdpgAgent<double> agent(3, 2, tiny_config());
  const std::vector<double> state{0.1, 0.5, 0.9};
  const auto a = agent.act_with_noise(state, 0.0);
  const auto b = agent.greedy_action(state);
  CHECK(a == b);
}

TEST_CASE("noisy actions stay clipped to the unit box") {
  DdpgAgent<double> agent(3, 2, tiny_config());
  const std::vector<double> state{0.2, 0.4, 0.6};
  for (int i = 0; i < 2000; ++i) {
    for (double v : agent.act_with_noise(state, 0.8)) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("noisy action mean matches the deterministic output away from the bounds") {
  DdpgAgent<double> agent(5, 3, tiny_config());
  const std::vector<double> state{0.3, 0.6, 0.1, 0.8, 0.5};
  const auto center = agent.greedy_action(state);
  // Keep the center far from 0/1 so clipping is negligible at sigma = 0.05.
  for (double c : center) {
    REQUIRE(c > 0.25);
    REQUIRE(c < 0.75);
  }
  const int n = 100000;
  std::vector<double> mean(center.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto a = agent.act_with_noise(state, 0.05);
    for (std::size_t j = 0; j < a.size(); ++j) mean[j] += a[j];
  }
  const double three_se = 3.0 * 0.05 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < mean.size(); ++j) {
    CHECK(std::abs(mean[j] / n - center[j]) < three_se);
  }
}

TEST_CASE("replay ring evicts the oldest entry") {
  ReplayBuffer<double> buffer(1, 1, 3);
  std::mt19937_64 rng(1);
  for (double v : {1.0, 2.0, 3.0, 4.0}) {
    const double s[] = {v};
    const double a[] = {v};
    buffer.push(s, a, v, s, false);
  }
  CHECK(buffer.size() == 3);
  // Sample widely; the reward 1.0 must be gone, 2..4 all present.
  std::vector<int> seen(5, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto batch = buffer.sample(3, rng);
    for (int j = 0; j < 3; ++j) ++seen[static_cast<int>(batch.rewards(j))];
  }
  CHECK(seen[1] == 0);
  CHECK(seen[2] > 0);
  CHECK(seen[3] > 0);
  CHECK(seen[4] > 0);
}

TEST_CASE("sampling an under-filled buffer signals not-ready") {
  ReplayBuffer<double> buffer(2, 1, 10);
  std::mt19937_64 rng(2);
  CHECK_FALSE(buffer.ready(4));
  CHECK_THROWS_AS(buffer.sample(4, rng), std::runtime_error);
  const double s[] = {0.0, 0.0};
  const double a[] = {0.0};
  for (int i = 0; i < 4; ++i) buffer.push(s, a, 0.0, s, false);
  CHECK(buffer.ready(4));
  CHECK_NOTHROW(buffer.sample(4, rng));
}

TEST_CASE("buffer sampling is uniform under a chi-squared test") {
  const int slots = 100;
  ReplayBuffer<double> buffer(1, 1, slots);
  for (int i = 0; i < slots; ++i) {
    const double s[] = {0.0};
    const double a[] = {0.0};
    buffer.push(s, a, static_cast<double>(i), s, false);
  }
  std::mt19937_64 rng(3);
  std::vector<long> counts(slots, 0);
  const long draws = 100000;
  long drawn = 0;
  while (drawn < draws) {
    const auto batch = buffer.sample(50, rng);
    for (int j = 0; j < 50 && drawn < draws; ++j, ++drawn) {
      ++counts[static_cast<int>(batch.rewards(j))];
    }
  }
  const double expected = static_cast<double>(draws) / slots;
  double chi2 = 0.0;
  for (long c : counts) {
    const double d = c - expected;
    chi2 += d * d / expected;
  }
  // 99 degrees of freedom, 1% critical value.
  CHECK(chi2 < 134.64);
}

TEST_CASE("critic target drops the bootstrap on terminal transitions") {
  auto config = tiny_config();
  DdpgAgent<double> agent(2, 1, config);
  // One-sample batches expose the target arithmetic directly.
  typename DdpgAgent<double>::Batch batch;
  batch.states = Mlp<double>::Matrix::Constant(2, 1, 0.5);
  batch.actions = Mlp<double>::Matrix::Constant(1, 1, 0.5);
  batch.next_states = Mlp<double>::Matrix::Constant(2, 1, 0.5);
  batch.rewards = Mlp<double>::Vector::Constant(1, 1.0);
  batch.done = Mlp<double>::Vector::Constant(1, 1.0);

  // Current critic value of (s, a) and the loss the update reports.
  const auto q0 = agent.critic()
                      .forward(DdpgAgent<double>::stack_inputs(batch.states, batch.actions))(0, 0);
  const double loss_terminal = agent.critic_update(batch);
  // Terminal: y = r exactly, loss = (q - r)^2.
  CHECK(loss_terminal == doctest::Approx((q0 - 1.0) * (q0 - 1.0)).epsilon(1e-9));
}

TEST_CASE("critic target bootstraps through the target networks when alive") {
  auto config = tiny_config();
  config.discount = 0.99;
  DdpgAgent<double> agent(2, 1, config);
  typename DdpgAgent<double>::Batch batch;
  batch.states = Mlp<double>::Matrix::Constant(2, 1, 0.2);
  batch.actions = Mlp<double>::Matrix::Constant(1, 1, 0.3);
  batch.next_states = Mlp<double>::Matrix::Constant(2, 1, 0.4);
  batch.rewards = Mlp<double>::Vector::Constant(1, 1.0);
  batch.done = Mlp<double>::Vector::Constant(1, 0.0);

  const auto next_action = agent.target_actor().forward(batch.next_states);
  const double qprime = agent.target_critic().forward(
      DdpgAgent<double>::stack_inputs(batch.next_states, next_action))(0, 0);
  const double y = 1.0 + 0.99 * qprime;
  const double q0 = agent.critic().forward(
      DdpgAgent<double>::stack_inputs(batch.states, batch.actions))(0, 0);
  const double loss = agent.critic_update(batch);
  CHECK(loss == doctest::Approx((q0 - y) * (q0 - y)).epsilon(1e-9));
  // r = 1, beta = 0.99, Q' = 2 would give y = 2.98; check the arithmetic.
  CHECK(1.0 + 0.99 * 2.0 == doctest::Approx(2.98));
}

TEST_CASE("a critic blind to the action leaves the actor untouched") {
  auto config = tiny_config();
  DdpgAgent<double> agent(2, 1, config);
  auto& critic = agent.mutable_critic();
  // Zero out every weight column that reads the action input (row index 2
  // of the critic input).
  critic.layers()[0].weights.col(2).setZero();
  const auto before = agent.actor().layers();
  typename DdpgAgent<double>::Batch batch;
  batch.states = Mlp<double>::Matrix::Random(2, 4);
  batch.actions = Mlp<double>::Matrix::Random(1, 4).cwiseAbs();
  batch.next_states = batch.states;
  batch.rewards = Mlp<double>::Vector::Zero(4);
  batch.done = Mlp<double>::Vector::Zero(4);
  agent.actor_update(batch);
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK((agent.actor().layers()[i].weights - before[i].weights).cwiseAbs().maxCoeff() == 0.0);
    CHECK((agent.actor().layers()[i].bias - before[i].bias).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("actor climbs a fixed critic toward its peak") {
  auto config = tiny_config();
  config.lr_actor = 0.01;
  DdpgAgent<double> agent(1, 1, config);
  install_absolute_value_critic(agent);

  typename DdpgAgent<double>::Batch batch;
  batch.states = Mlp<double>::Matrix::Constant(1, 4, 0.5);
  batch.actions = Mlp<double>::Matrix::Constant(1, 4, 0.5);
  batch.next_states = batch.states;
  batch.rewards = Mlp<double>::Vector::Zero(4);
  batch.done = Mlp<double>::Vector::Zero(4);

  double q_prev = -1e9;
  for (int i = 0; i < 4000; ++i) {
    const double q = agent.actor_update(batch);
    if (i == 0) q_prev = q;
  }
  const std::vector<double> state{0.5};
  const double mu = agent.greedy_action(state)[0];
  CHECK(std::abs(mu - 0.7) < 0.03);
  // Q(mu) improved along the way.
  CHECK(-std::abs(mu - 0.7) > q_prev);
}

TEST_CASE("chained actor gradient matches finite differences of mean Q") {
  auto config = tiny_config();
  config.hidden = {6};
  DdpgAgent<double> agent(3, 2, config);

  typename DdpgAgent<double>::Batch batch;
  batch.states = Mlp<double>::Matrix::Random(3, 5).cwiseAbs();
  batch.actions = Mlp<double>::Matrix::Random(2, 5).cwiseAbs();
  batch.next_states = batch.states;
  batch.rewards = Mlp<double>::Vector::Zero(5);
  batch.done = Mlp<double>::Vector::Zero(5);

  const auto mean_q = [&]() {
    const auto actions = agent.actor().forward(batch.states);
    return agent.critic()
        .forward(DdpgAgent<double>::stack_inputs(batch.states, actions))
        .row(0)
        .mean();
  };

  // Reproduce the chained gradient analytically (ascent direction).
  typename Mlp<double>::ForwardCache actor_cache;
  const auto actions = agent.actor().forward(batch.states, &actor_cache);
  typename Mlp<double>::ForwardCache critic_cache;
  agent.critic().forward(DdpgAgent<double>::stack_inputs(batch.states, actions), &critic_cache);
  Mlp<double>::Matrix dq = Mlp<double>::Matrix::Constant(1, 5, 1.0 / 5.0);
  const auto dinput = agent.critic().backward(critic_cache, dq, nullptr);
  typename Mlp<double>::Gradients grads;
  agent.mutable_actor().backward(actor_cache, dinput.bottomRows(2), &grads);

  const double h = 1e-5;
  double worst = 0.0;
  for (std::size_t li = 0; li < agent.actor().num_layers(); ++li) {
    auto& layer = agent.mutable_actor().layers()[li];
    for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
      for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
        const double saved = layer.weights(r, c);
        layer.weights(r, c) = saved + h;
        const double up = mean_q();
        layer.weights(r, c) = saved - h;
        const double down = mean_q();
        layer.weights(r, c) = saved;
        const double fd = (up - down) / (2.0 * h);
        const double analytic = grads.layers[li].weights(r, c);
        const double scale = std::max({std::abs(fd), std::abs(analytic), 1e-6});
        worst = std::max(worst, std::abs(fd - analytic) / scale);
      }
    }
  }
  CHECK(worst < 1e-4);
}

TEST_CASE("noise schedule decays to its floor by the configured fraction") {
  NoiseSchedule schedule;
  CHECK(schedule.sigma_for_episode(0, 1000) == doctest::Approx(0.2));
  CHECK(schedule.sigma_for_episode(800, 1000) == doctest::Approx(0.02).epsilon(1e-6));
  CHECK(schedule.sigma_for_episode(999, 1000) == doctest::Approx(0.02));
  // Monotone non-increasing.
  double prev = 1.0;
  for (int ep = 0; ep < 1000; ep += 10) {
    const double sigma = schedule.sigma_for_episode(ep, 1000);
    CHECK(sigma <= prev);
    prev = sigma;
  }
}

TEST_CASE("train config defaults match the training table") {
  const TrainConfig config;
  CHECK(config.episodes == 1000);
  CHECK(config.capacity == 10000);
  CHECK(config.batch == 128);
  CHECK(config.lr_actor == doctest::Approx(1e-4));
  CHECK(config.lr_critic == doctest::Approx(6e-4));
  CHECK(config.soft_rate == doctest::Approx(1e-3));
  CHECK(config.discount == doctest::Approx(0.99));
  CHECK(config.hidden == std::vector<int>{64, 128, 256, 256, 128, 64});
}

TEST_CASE("train config validation") {
  TrainConfig config = tiny_config();
  config.batch = 32;
  config.capacity = 16;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = tiny_config();
  config.soft_rate = 1.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = tiny_config();
  config.discount = -0.1;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("actor and critic widths follow the paper layout for K users") {
  // K = 5: actor 23 -> hidden -> 13, critic 36 -> hidden -> 1.
  TrainConfig config = tiny_config();
  DdpgAgent<double> agent(23, 13, config);
  CHECK(agent.actor().input_size() == 23);
  CHECK(agent.actor().output_size() == 13);
  CHECK(agent.critic().input_size() == 36);
  CHECK(agent.critic().output_size() == 1);
}
