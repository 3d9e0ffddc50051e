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

#ifndef AEROMEC_DDPG_MLP_HPP
#define AEROMEC_DDPG_MLP_HPP

#include <Eigen/Core>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace aeromec {

enum class Activation : std::uint8_t { kRelu = 0, kSigmoid = 1, kIdentity = 2 };

/**
 * Fully-connected network with explicit reverse-mode gradients.
 *
 * Samples are stored as columns, so a batched layer is one GEMM. Hidden
 * layers are rectified; the output activation is chosen at construction
 * (sigmoid for the actor, identity for the critic). The scalar type is a
 * template parameter: training runs in float, gradient checks in double.
 */
template <class Scalar>
class Mlp {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  struct Layer {
    Matrix weights;  // (out x in)
    Vector bias;     // (out)
  };

  struct Gradients {
    std::vector<Layer> layers;
  };

  /// Activations per layer, activations[0] being the input batch. The cache
  /// is only valid for backward() against the forward() that produced it.
  struct ForwardCache {
    std::vector<Matrix> activations;
  };

  Mlp() = default;

  /// Build a network with the given layer widths (input, hidden..., output)
  /// and initialize weights uniformly in +-1/sqrt(fan_in).
  static Mlp random(std::span<const int> widths, Activation output_activation,
                    std::mt19937_64& rng) {
    if (widths.size() < 2) {
      throw std::invalid_argument("mlp: need at least input and output widths");
    }
    Mlp net;
    net.output_activation_ = output_activation;
    net.layers_.resize(widths.size() - 1);
    for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
      const int in = widths[i];
      const int out = widths[i + 1];
      if (in <= 0 || out <= 0) {
        throw std::invalid_argument("mlp: layer widths must be positive");
      }
      const double bound = 1.0 / std::sqrt(static_cast<double>(in));
      std::uniform_real_distribution<double> dist(-bound, bound);
      auto& layer = net.layers_[i];
      layer.weights.resize(out, in);
      layer.bias.resize(out);
      for (Eigen::Index c = 0; c < layer.weights.cols(); ++c) {
        for (Eigen::Index r = 0; r < layer.weights.rows(); ++r) {
          layer.weights(r, c) = static_cast<Scalar>(dist(rng));
        }
      }
      for (Eigen::Index r = 0; r < layer.bias.size(); ++r) {
        layer.bias(r) = static_cast<Scalar>(dist(rng));
      }
    }
    return net;
  }

  /// Assemble a network from explicit layers (checkpoint loading).
  static Mlp from_layers(std::vector<Layer> layers, Activation output_activation) {
    if (layers.empty()) {
      throw std::invalid_argument("mlp: need at least one layer");
    }
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      if (layers[i].weights.rows() != layers[i + 1].weights.cols()) {
        throw std::invalid_argument("mlp: layer widths do not chain");
      }
    }
    for (const auto& layer : layers) {
      if (layer.bias.size() != layer.weights.rows()) {
        throw std::invalid_argument("mlp: bias width does not match layer output");
      }
    }
    Mlp net;
    net.layers_ = std::move(layers);
    net.output_activation_ = output_activation;
    return net;
  }

  int input_size() const { return static_cast<int>(layers_.front().weights.cols()); }
  int output_size() const { return static_cast<int>(layers_.back().weights.rows()); }
  std::size_t num_layers() const { return layers_.size(); }
  Activation output_activation() const { return output_activation_; }

  std::vector<Layer>& layers() { return layers_; }
  const std::vector<Layer>& layers() const { return layers_; }

  /// Batched forward pass; `input` is (input_size x batch). Fills `cache`
  /// when given so backward() can run.
  Matrix forward(const Matrix& input, ForwardCache* cache = nullptr) const {
    if (input.rows() != input_size()) {
      throw std::invalid_argument("mlp: input dimension mismatch");
    }
    if (cache != nullptr) {
      cache->activations.clear();
      cache->activations.reserve(layers_.size() + 1);
      cache->activations.push_back(input);
    }
    Matrix h = input;
    Matrix z;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
      z.noalias() = layers_[i].weights * h;
      z.colwise() += layers_[i].bias;
      const Activation act =
          i + 1 == layers_.size() ? output_activation_ : Activation::kRelu;
      apply_activation(z, act);
      h.swap(z);
      if (cache != nullptr) {
        cache->activations.push_back(h);
      }
    }
    return h;
  }

  /// Reverse-mode pass. `output_grad` is dLoss/dOutput, (output_size x
  /// batch). Returns dLoss/dInput; fills parameter gradients when `grads` is
  /// non-null (pass null when only input gradients are needed, e.g. to chain
  /// the critic's action gradient into the actor).
  Matrix backward(const ForwardCache& cache, const Matrix& output_grad,
                  Gradients* grads = nullptr) const {
    if (cache.activations.size() != layers_.size() + 1) {
      throw std::invalid_argument("mlp: stale or missing forward cache");
    }
    if (output_grad.rows() != output_size() ||
        output_grad.cols() != cache.activations.back().cols()) {
      throw std::invalid_argument("mlp: output gradient shape mismatch");
    }
    if (grads != nullptr) {
      grads->layers.resize(layers_.size());
    }
    Matrix delta = output_grad;
    Matrix next_delta;
    for (std::size_t idx = layers_.size(); idx-- > 0;) {
      const Activation act =
          idx + 1 == layers_.size() ? output_activation_ : Activation::kRelu;
      apply_activation_grad(delta, cache.activations[idx + 1], act);
      if (grads != nullptr) {
        grads->layers[idx].weights.noalias() = delta * cache.activations[idx].transpose();
        grads->layers[idx].bias = delta.rowwise().sum();
      }
      next_delta.noalias() = layers_[idx].weights.transpose() * delta;
      delta.swap(next_delta);
    }
    return delta;
  }

 private:
  static void apply_activation(Matrix& z, Activation act) {
    switch (act) {
      case Activation::kRelu:
        z = z.cwiseMax(Scalar(0));
        return;
      case Activation::kSigmoid:
        z = ((-z.array()).exp() + Scalar(1)).inverse();
        return;
      case Activation::kIdentity:
        return;
    }
    throw std::logic_error("mlp: unknown activation");
  }

  // Multiplies `delta` in place by the activation derivative, expressed
  // through the post-activation values (relu: 1 where a > 0; sigmoid:
  // a * (1 - a)).
  static void apply_activation_grad(Matrix& delta, const Matrix& post, Activation act) {
    switch (act) {
      case Activation::kRelu:
        delta.array() *= (post.array() > Scalar(0)).template cast<Scalar>();
        return;
      case Activation::kSigmoid:
        delta.array() *= post.array() * (Scalar(1) - post.array());
        return;
      case Activation::kIdentity:
        return;
    }
    throw std::logic_error("mlp: unknown activation");
  }

  std::vector<Layer> layers_;
  Activation output_activation_ = Activation::kIdentity;
};

/// target <- tau * online + (1 - tau) * target, elementwise.
template <class Scalar>
void soft_update(Mlp<Scalar>& target, const Mlp<Scalar>& online, Scalar tau) {
  if (target.num_layers() != online.num_layers()) {
    throw std::invalid_argument("mlp: soft update across mismatched networks");
  }
  for (std::size_t i = 0; i < target.num_layers(); ++i) {
    auto& t = target.layers()[i];
    const auto& o = online.layers()[i];
    if (t.weights.rows() != o.weights.rows() || t.weights.cols() != o.weights.cols()) {
      throw std::invalid_argument("mlp: soft update shape mismatch");
    }
    t.weights = tau * o.weights + (Scalar(1) - tau) * t.weights;
    t.bias = tau * o.bias + (Scalar(1) - tau) * t.bias;
  }
}

}  // namespace aeromec

#endif  // AEROMEC_DDPG_MLP_HPP
