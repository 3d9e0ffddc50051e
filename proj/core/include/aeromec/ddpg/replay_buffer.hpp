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

#ifndef AEROMEC_DDPG_REPLAY_BUFFER_HPP
#define AEROMEC_DDPG_REPLAY_BUFFER_HPP

#include <Eigen/Core>
#include <random>
#include <span>
#include <stdexcept>

namespace aeromec {

/// Ring buffer of transitions stored column-wise in flat matrices. Pushing
/// past capacity evicts the oldest entry; sampling draws uniformly with
/// replacement across the current contents.
template <class Scalar>
class ReplayBuffer {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  struct Batch {
    Matrix states;       // (state_dim x n)
    Matrix actions;      // (action_dim x n)
    Vector rewards;      // (n)
    Matrix next_states;  // (state_dim x n)
    Vector done;         // (n), 1 on terminal transitions
  };

  ReplayBuffer(int state_dim, int action_dim, int capacity)
      : states_(state_dim, capacity),
        actions_(action_dim, capacity),
        rewards_(capacity),
        next_states_(state_dim, capacity),
        done_(capacity) {
    if (state_dim <= 0 || action_dim <= 0 || capacity <= 0) {
      throw std::invalid_argument("replay: dimensions and capacity must be positive");
    }
  }

  int capacity() const { return static_cast<int>(rewards_.size()); }
  int size() const { return size_; }
  bool ready(int batch_size) const { return size_ >= batch_size; }

  void push(std::span<const Scalar> state, std::span<const Scalar> action, Scalar reward,
            std::span<const Scalar> next_state, bool terminal) {
    if (static_cast<Eigen::Index>(state.size()) != states_.rows() ||
        static_cast<Eigen::Index>(next_state.size()) != states_.rows() ||
        static_cast<Eigen::Index>(action.size()) != actions_.rows()) {
      throw std::invalid_argument("replay: transition dimension mismatch");
    }
    for (Eigen::Index r = 0; r < states_.rows(); ++r) {
      states_(r, head_) = state[r];
      next_states_(r, head_) = next_state[r];
    }
    for (Eigen::Index r = 0; r < actions_.rows(); ++r) {
      actions_(r, head_) = action[r];
    }
    rewards_(head_) = reward;
    done_(head_) = terminal ? Scalar(1) : Scalar(0);
    head_ = (head_ + 1) % capacity();
    size_ = std::min(size_ + 1, capacity());
  }

  /// Throws std::runtime_error while the buffer holds fewer than
  /// `batch_size` transitions; callers skip the update in that case.
  Batch sample(int batch_size, std::mt19937_64& rng) const {
    if (!ready(batch_size)) {
      throw std::runtime_error("replay: not enough transitions to sample");
    }
    Batch batch;
    batch.states.resize(states_.rows(), batch_size);
    batch.actions.resize(actions_.rows(), batch_size);
    batch.rewards.resize(batch_size);
    batch.next_states.resize(states_.rows(), batch_size);
    batch.done.resize(batch_size);
    std::uniform_int_distribution<int> pick(0, size_ - 1);
    for (int i = 0; i < batch_size; ++i) {
      const int j = pick(rng);
      batch.states.col(i) = states_.col(j);
      batch.actions.col(i) = actions_.col(j);
      batch.rewards(i) = rewards_(j);
      batch.next_states.col(i) = next_states_.col(j);
      batch.done(i) = done_(j);
    }
    return batch;
  }

 private:
  Matrix states_;
  Matrix actions_;
  Vector rewards_;
  Matrix next_states_;
  Vector done_;
  int head_ = 0;
  int size_ = 0;
};

}  // namespace aeromec

#endif  // AEROMEC_DDPG_REPLAY_BUFFER_HPP
