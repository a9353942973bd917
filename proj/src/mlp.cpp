// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/mlp.hpp"

#include <cmath>
#include <string>

#include "riskattr/errors.hpp"
#include "riskattr/rng.hpp"

namespace riskattr {

Mlp Mlp::zeros(std::vector<int> layer_sizes) {
  Mlp net;
  net.layer_sizes = std::move(layer_sizes);
  if (net.layer_sizes.size() < 2)
    throw contract_violation("Mlp: need at least input and output layers");
  for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
    const int in = net.layer_sizes[l], out = net.layer_sizes[l + 1];
    if (in <= 0 || out <= 0) throw contract_violation("Mlp: layer sizes must be positive");
    net.weights.emplace_back(static_cast<std::size_t>(in) * out, 0.0);
    net.biases.emplace_back(static_cast<std::size_t>(out), 0.0);
  }
  return net;
}

Mlp Mlp::he_uniform(std::vector<int> layer_sizes, std::uint64_t seed, double scale) {
  if (!(scale > 0.0)) throw contract_violation("Mlp: init scale must be positive");
  Mlp net = zeros(std::move(layer_sizes));
  Rng rng(seed);
  for (std::size_t l = 0; l < net.n_layers(); ++l) {
    const double limit = scale * std::sqrt(6.0 / net.layer_sizes[l]);
    for (double& w : net.weights[l]) w = rng.uniform(-limit, limit);
  }
  return net;
}

std::size_t Mlp::n_parameters() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < n_layers(); ++l) n += weights[l].size() + biases[l].size();
  return n;
}

void Mlp::validate() const {
  if (layer_sizes.size() < 2 || layer_sizes.back() != 1)
    throw contract_violation("Mlp: expects layer sizes {n_in, ..., 1}");
  if (weights.size() != layer_sizes.size() - 1 || biases.size() != weights.size())
    throw contract_violation("Mlp: layer count mismatch");
  for (std::size_t l = 0; l < n_layers(); ++l) {
    const std::size_t in = static_cast<std::size_t>(layer_sizes[l]);
    const std::size_t out = static_cast<std::size_t>(layer_sizes[l + 1]);
    if (weights[l].size() != in * out || biases[l].size() != out)
      throw contract_violation("Mlp: weight block " + std::to_string(l) + " has wrong shape");
    for (double w : weights[l])
      if (!std::isfinite(w)) throw contract_violation("Mlp: non-finite weight");
    for (double b : biases[l])
      if (!std::isfinite(b)) throw contract_violation("Mlp: non-finite bias");
  }
}

double Mlp::forward(const std::vector<double>& x) const {
  if (x.size() != n_inputs()) throw contract_violation("Mlp::forward: input size mismatch");
  std::vector<double> a = x;
  std::vector<double> z;
  for (std::size_t l = 0; l < n_layers(); ++l) {
    const std::size_t in = a.size();
    const std::size_t out = biases[l].size();
    z.assign(out, 0.0);
    for (std::size_t o = 0; o < out; ++o) {
      double s = biases[l][o];
      const double* row = &weights[l][o * in];
      for (std::size_t i = 0; i < in; ++i) s += row[i] * a[i];
      z[o] = s;
    }
    if (l + 1 < n_layers())
      for (double& v : z) v = v > 0.0 ? v : 0.0;
    a.swap(z);
  }
  return a[0];
}

std::vector<double> Mlp::input_gradient(const std::vector<double>& x) const {
  if (x.size() != n_inputs())
    throw contract_violation("Mlp::input_gradient: input size mismatch");

  // forward pass keeping pre-activations
  std::vector<std::vector<double>> acts;  // activations per layer, acts[0] = x
  acts.push_back(x);
  std::vector<std::vector<double>> pre(n_layers());
  for (std::size_t l = 0; l < n_layers(); ++l) {
    const std::vector<double>& a = acts.back();
    const std::size_t in = a.size();
    const std::size_t out = biases[l].size();
    pre[l].assign(out, 0.0);
    for (std::size_t o = 0; o < out; ++o) {
      double s = biases[l][o];
      const double* row = &weights[l][o * in];
      for (std::size_t i = 0; i < in; ++i) s += row[i] * a[i];
      pre[l][o] = s;
    }
    std::vector<double> next = pre[l];
    if (l + 1 < n_layers())
      for (double& v : next) v = v > 0.0 ? v : 0.0;
    acts.push_back(std::move(next));
  }

  // backward pass: delta starts at d out / d out = 1
  std::vector<double> delta{1.0};
  for (std::size_t l = n_layers(); l-- > 0;) {
    const std::size_t in = acts[l].size();
    const std::size_t out = biases[l].size();
    if (l + 1 < n_layers())
      for (std::size_t o = 0; o < out; ++o)
        if (pre[l][o] <= 0.0) delta[o] = 0.0;
    std::vector<double> prev(in, 0.0);
    for (std::size_t o = 0; o < out; ++o) {
      const double* row = &weights[l][o * in];
      const double d = delta[o];
      for (std::size_t i = 0; i < in; ++i) prev[i] += row[i] * d;
    }
    delta.swap(prev);
  }
  return delta;
}

std::vector<double> Mlp::pack() const {
  std::vector<double> theta;
  theta.reserve(n_parameters());
  for (std::size_t l = 0; l < n_layers(); ++l) {
    theta.insert(theta.end(), weights[l].begin(), weights[l].end());
    theta.insert(theta.end(), biases[l].begin(), biases[l].end());
  }
  return theta;
}

void Mlp::unpack(const std::vector<double>& theta) {
  if (theta.size() != n_parameters())
    throw contract_violation("Mlp::unpack: parameter count mismatch");
  std::size_t pos = 0;
  for (std::size_t l = 0; l < n_layers(); ++l) {
    for (double& w : weights[l]) w = theta[pos++];
    for (double& b : biases[l]) b = theta[pos++];
  }
}

}  // namespace riskattr
