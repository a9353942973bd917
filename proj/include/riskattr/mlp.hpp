// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace riskattr {

/// Plain fully connected network: affine layers with ReLU on the hidden
/// ones and an identity scalar output. Weights are row-major
/// [out x in] per layer. The ReLU subgradient at 0 is taken as 0.
struct Mlp {
  std::vector<int> layer_sizes;                 // {n_in, hidden..., 1}
  std::vector<std::vector<double>> weights;     // one block per layer
  std::vector<std::vector<double>> biases;

  static Mlp zeros(std::vector<int> layer_sizes);
  static Mlp he_uniform(std::vector<int> layer_sizes, std::uint64_t seed, double scale = 1.0);

  std::size_t n_layers() const { return weights.size(); }
  std::size_t n_inputs() const { return static_cast<std::size_t>(layer_sizes.front()); }
  std::size_t n_parameters() const;

  void validate() const;

  double forward(const std::vector<double>& x) const;

  /// d output / d input by backpropagation.
  std::vector<double> input_gradient(const std::vector<double>& x) const;

  /// Flat parameter view used by the trainer (weights then biases,
  /// layer by layer).
  std::vector<double> pack() const;
  void unpack(const std::vector<double>& theta);
};

}  // namespace riskattr
