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

#ifndef AEROMEC_DDPG_ADAM_HPP
#define AEROMEC_DDPG_ADAM_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aeromec/ddpg/mlp.hpp"

namespace aeromec {

/// Per-network Adam accumulators, shaped like the network they optimize.
template <class Scalar>
struct AdamState {
  using Layer = typename Mlp<Scalar>::Layer;

  std::vector<Layer> first_moment;
  std::vector<Layer> second_moment;
  long step = 0;
  Scalar beta1 = Scalar(0.9);
  Scalar beta2 = Scalar(0.999);
  Scalar epsilon = Scalar(1e-8);

  static AdamState shaped_like(const Mlp<Scalar>& net) {
    AdamState state;
    state.first_moment.resize(net.num_layers());
    state.second_moment.resize(net.num_layers());
    for (std::size_t i = 0; i < net.num_layers(); ++i) {
      const auto& l = net.layers()[i];
      state.first_moment[i].weights = Mlp<Scalar>::Matrix::Zero(l.weights.rows(), l.weights.cols());
      state.first_moment[i].bias = Mlp<Scalar>::Vector::Zero(l.bias.size());
      state.second_moment[i].weights =
          Mlp<Scalar>::Matrix::Zero(l.weights.rows(), l.weights.cols());
      state.second_moment[i].bias = Mlp<Scalar>::Vector::Zero(l.bias.size());
    }
    return state;
  }
};

/// One bias-corrected Adam update of `net` along `grads` (a descent step).
template <class Scalar>
void adam_step(Mlp<Scalar>& net, const typename Mlp<Scalar>::Gradients& grads,
               AdamState<Scalar>& state, Scalar lr) {
  if (grads.layers.size() != net.num_layers() ||
      state.first_moment.size() != net.num_layers()) {
    throw std::invalid_argument("adam: gradient/state shape mismatch");
  }
  ++state.step;
  const Scalar correction1 = Scalar(1) - std::pow(state.beta1, Scalar(state.step));
  const Scalar correction2 = Scalar(1) - std::pow(state.beta2, Scalar(state.step));
  const auto update = [&](auto& param, const auto& grad, auto& m, auto& v) {
    if (param.rows() != grad.rows() || param.cols() != grad.cols()) {
      throw std::invalid_argument("adam: gradient shape mismatch");
    }
    m = state.beta1 * m + (Scalar(1) - state.beta1) * grad;
    v = state.beta2 * v + (Scalar(1) - state.beta2) * grad.cwiseProduct(grad);
    param.array() -= lr * (m.array() / correction1) /
                     ((v.array() / correction2).sqrt() + state.epsilon);
  };
  for (std::size_t i = 0; i < net.num_layers(); ++i) {
    update(net.layers()[i].weights, grads.layers[i].weights, state.first_moment[i].weights,
           state.second_moment[i].weights);
    update(net.layers()[i].bias, grads.layers[i].bias, state.first_moment[i].bias,
           state.second_moment[i].bias);
  }
}

}  // namespace aeromec

#endif  // AEROMEC_DDPG_ADAM_HPP
