// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "riskattr/errors.hpp"
#include "riskattr/rng.hpp"

namespace riskattr {

void TrainConfig::validate() const {
  if (split_fraction <= 0.0 || split_fraction >= 1.0)
    throw contract_violation("TrainConfig: split_fraction must be in (0,1)");
  if (l2_lambda < 0.0) throw contract_violation("TrainConfig: l2_lambda must be >= 0");
  if (!(init_scale > 0.0)) throw contract_violation("TrainConfig: init_scale must be positive");
  if (max_iters < 0) throw contract_violation("TrainConfig: max_iters must be >= 0");
  for (int h : hidden)
    if (h <= 0) throw contract_violation("TrainConfig: hidden sizes must be positive");
}

std::vector<double> Standardizer::apply(const std::vector<double>& x) const {
  std::vector<double> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - mean[i]) / std_dev[i];
  return z;
}

// ---------------------------------------------------------------------------

MlpSurrogate::MlpSurrogate(Mlp net, Standardizer input_scaler, double y_mean, double y_std,
                           std::vector<std::string> feature_names)
    : net_(std::move(net)),
      scaler_(std::move(input_scaler)),
      y_mean_(y_mean),
      y_std_(y_std),
      names_(FeatureVector::make_names(std::move(feature_names))),
      shape_(ShapeProfile::none_declared(names_->size())) {
  net_.validate();
  if (net_.n_inputs() != names_->size() || scaler_.mean.size() != names_->size() ||
      scaler_.std_dev.size() != names_->size())
    throw contract_violation("MlpSurrogate: feature count mismatch");
  for (double s : scaler_.std_dev)
    if (!(s > 0.0)) throw contract_violation("MlpSurrogate: nonpositive feature std");
  if (!(y_std_ > 0.0)) throw contract_violation("MlpSurrogate: nonpositive target std");
}

double MlpSurrogate::evaluate(const FeatureVector& x) const {
  require_compatible(x);
  return y_mean_ + y_std_ * net_.forward(scaler_.apply(x.values()));
}

std::vector<double> MlpSurrogate::gradient(const FeatureVector& x) const {
  require_compatible(x);
  std::vector<double> g = net_.input_gradient(scaler_.apply(x.values()));
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= y_std_ / scaler_.std_dev[i];
  return g;
}

void MlpSurrogate::declare_shape(ShapeProfile shape) {
  shape.validate(names_->size());
  shape_ = std::move(shape);
}

std::string MlpSurrogate::to_json_string() const {
  nlohmann::ordered_json j;
  j["layer_sizes"] = net_.layer_sizes;
  j["weights"] = net_.weights;
  j["biases"] = net_.biases;
  j["feature_names"] = *names_;
  j["standardization"] = {{"x_mean", scaler_.mean},
                          {"x_std", scaler_.std_dev},
                          {"y_mean", y_mean_},
                          {"y_std", y_std_}};
  return j.dump(2) + "\n";
}

std::shared_ptr<MlpSurrogate> MlpSurrogate::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("surrogate json: ") + e.what(), 0);
  }
  try {
    Mlp net;
    net.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
    net.weights = j.at("weights").get<std::vector<std::vector<double>>>();
    net.biases = j.at("biases").get<std::vector<std::vector<double>>>();
    Standardizer scaler;
    const auto& s = j.at("standardization");
    scaler.mean = s.at("x_mean").get<std::vector<double>>();
    scaler.std_dev = s.at("x_std").get<std::vector<double>>();
    return std::make_shared<MlpSurrogate>(
        std::move(net), std::move(scaler), s.at("y_mean").get<double>(),
        s.at("y_std").get<double>(), j.at("feature_names").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("surrogate json: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

double training_objective(const Mlp& net, const std::vector<std::vector<double>>& xs,
                          const std::vector<double>& ys, double l2_lambda,
                          std::vector<double>* grad) {
  if (xs.size() != ys.size() || xs.empty())
    throw contract_violation("training_objective: xs and ys must be equally long, nonempty");
  const std::size_t m = xs.size();
  const std::size_t L = net.n_layers();

  std::vector<std::vector<double>> gw, gb;
  if (grad) {
    gw.resize(L);
    gb.resize(L);
    for (std::size_t l = 0; l < L; ++l) {
      gw[l].assign(net.weights[l].size(), 0.0);
      gb[l].assign(net.biases[l].size(), 0.0);
    }
  }

  double sse = 0.0;
  std::vector<std::vector<double>> acts(L + 1);
  std::vector<std::vector<double>> pre(L);
  for (std::size_t s = 0; s < m; ++s) {
    acts[0] = xs[s];
    for (std::size_t l = 0; l < L; ++l) {
      const std::vector<double>& a = acts[l];
      const std::size_t in = a.size(), out = net.biases[l].size();
      pre[l].assign(out, 0.0);
      for (std::size_t o = 0; o < out; ++o) {
        double v = net.biases[l][o];
        const double* row = &net.weights[l][o * in];
        for (std::size_t i = 0; i < in; ++i) v += row[i] * a[i];
        pre[l][o] = v;
      }
      acts[l + 1] = pre[l];
      if (l + 1 < L)
        for (double& v : acts[l + 1]) v = v > 0.0 ? v : 0.0;
    }
    const double err = acts[L][0] - ys[s];
    sse += err * err;
    if (!grad) continue;

    std::vector<double> delta{2.0 * err / static_cast<double>(m)};
    for (std::size_t l = L; l-- > 0;) {
      const std::vector<double>& a = acts[l];
      const std::size_t in = a.size(), out = net.biases[l].size();
      if (l + 1 < L)
        for (std::size_t o = 0; o < out; ++o)
          if (pre[l][o] <= 0.0) delta[o] = 0.0;
      for (std::size_t o = 0; o < out; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        gb[l][o] += d;
        double* grow = &gw[l][o * in];
        for (std::size_t i = 0; i < in; ++i) grow[i] += d * a[i];
      }
      if (l == 0) break;
      std::vector<double> prev(in, 0.0);
      for (std::size_t o = 0; o < out; ++o) {
        const double d = delta[o];
        if (d == 0.0) continue;
        const double* row = &net.weights[l][o * in];
        for (std::size_t i = 0; i < in; ++i) prev[i] += row[i] * d;
      }
      delta.swap(prev);
    }
  }

  double weight_norm2 = 0.0;
  for (const auto& block : net.weights)
    for (double w : block) weight_norm2 += w * w;

  if (grad) {
    for (std::size_t l = 0; l < L; ++l)
      for (std::size_t k = 0; k < gw[l].size(); ++k)
        gw[l][k] += 2.0 * l2_lambda * net.weights[l][k];
    grad->clear();
    grad->reserve(net.n_parameters());
    for (std::size_t l = 0; l < L; ++l) {
      grad->insert(grad->end(), gw[l].begin(), gw[l].end());
      grad->insert(grad->end(), gb[l].begin(), gb[l].end());
    }
  }
  return sse / static_cast<double>(m) + l2_lambda * weight_norm2;
}

namespace {

/// Packed-parameter view over training_objective used by the CG loop.
class Objective {
 public:
  Objective(std::vector<std::vector<double>> xs, std::vector<double> ys,
            std::vector<int> layer_sizes, double l2_lambda)
      : xs_(std::move(xs)), ys_(std::move(ys)), l2_(l2_lambda),
        net_(Mlp::zeros(std::move(layer_sizes))) {}

  double value(const std::vector<double>& theta) {
    net_.unpack(theta);
    return training_objective(net_, xs_, ys_, l2_, nullptr);
  }

  double value_and_gradient(const std::vector<double>& theta, std::vector<double>& grad) {
    net_.unpack(theta);
    return training_objective(net_, xs_, ys_, l2_, &grad);
  }

 private:
  std::vector<std::vector<double>> xs_;
  std::vector<double> ys_;
  double l2_;
  Mlp net_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double rmse_on(const Mlp& net, const std::vector<std::vector<double>>& xs,
               const std::vector<double>& ys_raw, double y_mean, double y_std) {
  double sse = 0.0;
  for (std::size_t s = 0; s < xs.size(); ++s) {
    const double pred = y_mean + y_std * net.forward(xs[s]);
    const double e = pred - ys_raw[s];
    sse += e * e;
  }
  return std::sqrt(sse / static_cast<double>(xs.size()));
}

}  // namespace

TrainResult train_surrogate(const std::vector<OptionRecord>& records,
                            const TrainConfig& config) {
  config.validate();
  if (records.size() < 50)
    throw insufficient_data_error("train_surrogate: need at least 50 records, got " +
                                  std::to_string(records.size()));
  for (const OptionRecord& rec : records) rec.validate();

  const std::size_t n_feat = 5;

  // seeded split: shuffle indices, first split_fraction go to training
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(config.seed);
  for (std::size_t i = order.size(); i-- > 1;)
    std::swap(order[i], order[rng.below(i + 1)]);
  const std::size_t n_train = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::floor(config.split_fraction * records.size())));

  std::vector<std::vector<double>> x_train, x_test;
  std::vector<double> y_train_raw, y_test_raw;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const OptionRecord& rec = records[order[k]];
    if (k < n_train) {
      x_train.push_back(rec.features());
      y_train_raw.push_back(rec.price);
    } else {
      x_test.push_back(rec.features());
      y_test_raw.push_back(rec.price);
    }
  }
  if (x_test.empty())
    throw insufficient_data_error("train_surrogate: test split is empty");

  // z-score from the training split; degenerate columns get unit scale
  Standardizer scaler;
  scaler.mean.assign(n_feat, 0.0);
  scaler.std_dev.assign(n_feat, 0.0);
  for (const auto& x : x_train)
    for (std::size_t i = 0; i < n_feat; ++i) scaler.mean[i] += x[i];
  for (double& v : scaler.mean) v /= static_cast<double>(x_train.size());
  for (const auto& x : x_train)
    for (std::size_t i = 0; i < n_feat; ++i) {
      const double d = x[i] - scaler.mean[i];
      scaler.std_dev[i] += d * d;
    }
  for (double& v : scaler.std_dev) {
    v = std::sqrt(v / static_cast<double>(x_train.size()));
    if (v < 1e-12) v = 1.0;
  }
  double y_mean = 0.0, y_std = 0.0;
  for (double y : y_train_raw) y_mean += y;
  y_mean /= static_cast<double>(y_train_raw.size());
  for (double y : y_train_raw) y_std += (y - y_mean) * (y - y_mean);
  y_std = std::sqrt(y_std / static_cast<double>(y_train_raw.size()));
  if (y_std < 1e-12) y_std = 1.0;
  if (!config.standardize_target) {
    y_mean = 0.0;
    y_std = 1.0;
  }

  std::vector<std::vector<double>> xs(x_train.size());
  std::vector<double> ys(x_train.size());
  for (std::size_t s = 0; s < x_train.size(); ++s) {
    xs[s] = scaler.apply(x_train[s]);
    ys[s] = (y_train_raw[s] - y_mean) / y_std;
  }
  std::vector<std::vector<double>> xs_test(x_test.size());
  for (std::size_t s = 0; s < x_test.size(); ++s) xs_test[s] = scaler.apply(x_test[s]);

  std::vector<int> layer_sizes;
  layer_sizes.push_back(static_cast<int>(n_feat));
  for (int h : config.hidden) layer_sizes.push_back(h);
  layer_sizes.push_back(1);

  Objective obj(std::move(xs), std::move(ys), layer_sizes, config.l2_lambda);
  Mlp net = Mlp::he_uniform(layer_sizes, config.seed, config.init_scale);
  std::vector<double> theta = net.pack();
  const std::size_t n_params = theta.size();

  TrainResult result;

  std::vector<double> grad, grad_prev, direction;
  double f = obj.value_and_gradient(theta, grad);
  if (!std::isfinite(f)) throw divergence_error("train_surrogate: non-finite initial loss", 0);
  result.loss_history.push_back(f);
  direction.resize(n_params);
  for (std::size_t i = 0; i < n_params; ++i) direction[i] = -grad[i];

  double step = 1.0;
  std::vector<double> trial(n_params);
  const bool use_cg = config.optimizer == Optimizer::nonlinear_conjugate_gradient;

  for (int iter = 0; iter < config.max_iters; ++iter) {
    const double g_norm2 = dot(grad, grad);
    if (g_norm2 < 1e-20) break;

    double slope = dot(grad, direction);
    if (slope >= 0.0) {  // not a descent direction: restart on steepest descent
      for (std::size_t i = 0; i < n_params; ++i) direction[i] = -grad[i];
      slope = -g_norm2;
    }

    // Armijo backtracking with a forward-tracking expansion: once a step
    // satisfies the decrease condition, keep doubling while the loss
    // still improves
    auto value_at = [&](double a) {
      for (std::size_t i = 0; i < n_params; ++i) trial[i] = theta[i] + a * direction[i];
      const double v = obj.value(trial);
      if (!std::isfinite(v))
        throw divergence_error("train_surrogate: non-finite loss in line search",
                               static_cast<std::size_t>(iter));
      return v;
    };
    double alpha = step;
    double f_new = 0.0;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      f_new = value_at(alpha);
      if (f_new <= f + 1e-4 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;
    for (int fw = 0; fw < 20; ++fw) {
      const double wider = value_at(alpha * 2.0);
      if (wider >= f_new) break;
      alpha *= 2.0;
      f_new = wider;
    }
    for (std::size_t i = 0; i < n_params; ++i) trial[i] = theta[i] + alpha * direction[i];

    theta.swap(trial);
    f = f_new;
    result.loss_history.push_back(f);
    result.iterations = iter + 1;
    step = std::min(alpha * 2.0, 1e4);

    grad_prev = grad;
    f = obj.value_and_gradient(theta, grad);

    if (use_cg) {
      // Polak-Ribiere+ with a periodic restart
      double beta = 0.0;
      if ((iter + 1) % static_cast<int>(n_params) != 0) {
        double num = 0.0;
        for (std::size_t i = 0; i < n_params; ++i) num += grad[i] * (grad[i] - grad_prev[i]);
        const double den = dot(grad_prev, grad_prev);
        if (den > 0.0) beta = std::max(0.0, num / den);
      }
      for (std::size_t i = 0; i < n_params; ++i)
        direction[i] = -grad[i] + beta * direction[i];
    } else {
      for (std::size_t i = 0; i < n_params; ++i) direction[i] = -grad[i];
    }
  }

  net.unpack(theta);
  std::vector<std::vector<double>> xs_train_std(x_train.size());
  for (std::size_t s = 0; s < x_train.size(); ++s) xs_train_std[s] = scaler.apply(x_train[s]);

  result.train_rmse = rmse_on(net, xs_train_std, y_train_raw, y_mean, y_std);
  result.test_rmse = rmse_on(net, xs_test, y_test_raw, y_mean, y_std);
  result.model = std::make_shared<MlpSurrogate>(std::move(net), std::move(scaler), y_mean,
                                                y_std, BsmModel::feature_names());
  return result;
}

}  // namespace riskattr
