// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "riskattr/mlp.hpp"
#include "riskattr/option_record.hpp"
#include "riskattr/pricing_model.hpp"

namespace riskattr {

enum class Optimizer { nonlinear_conjugate_gradient, gradient_descent };

struct TrainConfig {
  std::vector<int> hidden = {32, 16};
  double l2_lambda = 1e-3;
  int max_iters = 1000;
  Optimizer optimizer = Optimizer::nonlinear_conjugate_gradient;
  double split_fraction = 0.75;
  std::uint64_t seed = 0;
  /// Multiplier on the He fan-in initialization limit.
  double init_scale = 1.0;
  /// Z-score the target as well as the features. Off, the net regresses
  /// raw prices, which leaves the L2 penalty comparatively weak.
  bool standardize_target = true;

  void validate() const;
};

/// Per-feature z-score transform frozen from the training split.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> std_dev;

  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Trained network exposed through the PricingModel interface. The
/// standardization of inputs and target is inverted transparently:
/// evaluate() takes raw features and returns a raw price.
class MlpSurrogate : public PricingModel {
 public:
  MlpSurrogate(Mlp net, Standardizer input_scaler, double y_mean, double y_std,
               std::vector<std::string> feature_names);

  std::size_t n_features() const override { return names_->size(); }
  const std::vector<std::string>& names() const override { return *names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

  /// Shape flags are declared by the caller, not learned; set before the
  /// model is shared across threads.
  void declare_shape(ShapeProfile shape);

  const Mlp& net() const { return net_; }
  const Standardizer& input_scaler() const { return scaler_; }
  double y_mean() const { return y_mean_; }
  double y_std() const { return y_std_; }

  std::string to_json_string() const;
  static std::shared_ptr<MlpSurrogate> from_json_string(const std::string& text);

 private:
  Mlp net_;
  Standardizer scaler_;
  double y_mean_, y_std_;
  FeatureVector::NamesPtr names_;
  ShapeProfile shape_;
};

struct TrainResult {
  std::shared_ptr<MlpSurrogate> model;
  double train_rmse = 0.0;  // raw price units
  double test_rmse = 0.0;
  std::vector<double> loss_history;  // objective at each accepted step
  int iterations = 0;
};

/// Fits the ReLU net to (features -> price) by full-batch Polak-Ribiere
/// nonlinear conjugate gradient with Armijo backtracking and periodic
/// restarts, minimizing MSE + lambda * ||W||^2 on standardized data.
/// Deterministic given the seed and the input order.
TrainResult train_surrogate(const std::vector<OptionRecord>& records,
                            const TrainConfig& config = {});

/// Full-batch MSE + lambda ||W||^2 (weights only) and, when grad is
/// non-null, its gradient in pack() order via backpropagation. This is
/// the exact quantity the trainer descends.
double training_objective(const Mlp& net, const std::vector<std::vector<double>>& xs,
                          const std::vector<double>& ys, double l2_lambda,
                          std::vector<double>* grad = nullptr);

}  // namespace riskattr
