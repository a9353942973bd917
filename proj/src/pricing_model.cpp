// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/pricing_model.hpp"

#include <cmath>
#include <utility>

#include "riskattr/errors.hpp"

namespace riskattr {

std::vector<double> PricingModel::gradient(const FeatureVector&) const {
  throw capability_error("model provides no analytic gradient; wrap it in "
                         "FiniteDifferenceModel for a central-difference one");
}

FeatureVector::NamesPtr PricingModel::names_handle() const {
  return FeatureVector::make_names(names());
}

void PricingModel::require_compatible(const FeatureVector& x) const {
  if (x.size() != n_features() || x.names() != names())
    throw contract_violation("input features do not match the model's feature list");
}

// ---------------------------------------------------------------------------

FunctionModel::FunctionModel(std::vector<std::string> names, ValueFn value)
    : names_(FeatureVector::make_names(std::move(names))),
      value_(std::move(value)),
      shape_(ShapeProfile::none_declared(names_->size())) {}

FunctionModel::FunctionModel(std::vector<std::string> names, ValueFn value, GradientFn grad)
    : names_(FeatureVector::make_names(std::move(names))),
      value_(std::move(value)),
      grad_(std::move(grad)),
      shape_(ShapeProfile::none_declared(names_->size())) {}

double FunctionModel::evaluate(const FeatureVector& x) const {
  require_compatible(x);
  return value_(x.values());
}

std::vector<double> FunctionModel::gradient(const FeatureVector& x) const {
  if (!grad_) return PricingModel::gradient(x);
  require_compatible(x);
  return grad_(x.values());
}

void FunctionModel::declare_shape(ShapeProfile shape) {
  shape.validate(names_->size());
  shape_ = std::move(shape);
}

// ---------------------------------------------------------------------------

FiniteDifferenceModel::FiniteDifferenceModel(std::shared_ptr<const PricingModel> base,
                                             double relative_step)
    : base_(std::move(base)), rel_step_(relative_step) {
  if (!base_) throw contract_violation("FiniteDifferenceModel: null base model");
}

std::vector<double> FiniteDifferenceModel::gradient(const FeatureVector& x) const {
  base_->require_compatible(x);
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = rel_step_ * std::max(1.0, std::fabs(x.value(i)));
    const double up = base_->evaluate(x.with_value(i, x.value(i) + h));
    const double dn = base_->evaluate(x.with_value(i, x.value(i) - h));
    g[i] = (up - dn) / (2.0 * h);
  }
  return g;
}

// ---------------------------------------------------------------------------

SliceModel::SliceModel(std::shared_ptr<const PricingModel> base,
                       std::vector<std::pair<std::size_t, double>> pinned)
    : base_(std::move(base)) {
  if (!base_) throw contract_violation("SliceModel: null base model");
  const std::size_t n = base_->n_features();
  pinned_values_.assign(n, 0.0);
  is_pinned_.assign(n, false);
  for (auto& [idx, v] : pinned) {
    if (idx >= n) throw contract_violation("SliceModel: pinned index out of range");
    if (is_pinned_[idx]) throw contract_violation("SliceModel: feature pinned twice");
    is_pinned_[idx] = true;
    pinned_values_[idx] = v;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pinned_[i]) {
      free_.push_back(i);
      names.push_back(base_->names()[i]);
    }
  if (free_.empty()) throw contract_violation("SliceModel: no free features left");
  free_names_ = FeatureVector::make_names(std::move(names));

  // Re-index the base shape onto the free features.
  const ShapeProfile& bs = base_->shape();
  shape_.curvature.assign(free_.size(), Curvature::none);
  for (std::size_t j = 0; j < free_.size(); ++j) {
    const std::size_t i = free_[j];
    if (bs.direction(i) > 0) shape_.monotone_increasing.insert(j);
    if (bs.direction(i) < 0) shape_.monotone_decreasing.insert(j);
    shape_.curvature[j] = bs.curvature_of(i);
  }
}

FeatureVector SliceModel::embed(const FeatureVector& x) const {
  require_compatible(x);
  std::vector<double> full = pinned_values_;
  for (std::size_t j = 0; j < free_.size(); ++j) full[free_[j]] = x.value(j);
  return FeatureVector(base_->names_handle(), std::move(full));
}

double SliceModel::evaluate(const FeatureVector& x) const {
  return base_->evaluate(embed(x));
}

std::vector<double> SliceModel::gradient(const FeatureVector& x) const {
  std::vector<double> full = base_->gradient(embed(x));
  std::vector<double> g(free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) g[j] = full[free_[j]];
  return g;
}

// ---------------------------------------------------------------------------

AppendDummyModel::AppendDummyModel(std::shared_ptr<const PricingModel> base,
                                   std::string dummy_name)
    : base_(std::move(base)) {
  if (!base_) throw contract_violation("AppendDummyModel: null base model");
  std::vector<std::string> names = base_->names();
  names.push_back(std::move(dummy_name));
  names_ = FeatureVector::make_names(std::move(names));
  shape_ = base_->shape();
  shape_.curvature.resize(names_->size(), Curvature::none);
}

FeatureVector AppendDummyModel::strip(const FeatureVector& x) const {
  require_compatible(x);
  std::vector<double> vals(x.values().begin(), x.values().end() - 1);
  return FeatureVector(base_->names_handle(), std::move(vals));
}

double AppendDummyModel::evaluate(const FeatureVector& x) const {
  return base_->evaluate(strip(x));
}

std::vector<double> AppendDummyModel::gradient(const FeatureVector& x) const {
  std::vector<double> g = base_->gradient(strip(x));
  g.push_back(0.0);
  return g;
}

}  // namespace riskattr
