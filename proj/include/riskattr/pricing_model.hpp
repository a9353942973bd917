// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "riskattr/feature_vector.hpp"
#include "riskattr/shape_profile.hpp"

namespace riskattr {

/// Evaluation interface shared by the analytic pricers and the trained
/// surrogate. Implementations are immutable and safe to evaluate from
/// concurrent workers.
class PricingModel {
 public:
  virtual ~PricingModel() = default;

  virtual std::size_t n_features() const = 0;
  virtual const std::vector<std::string>& names() const = 0;
  virtual double evaluate(const FeatureVector& x) const = 0;

  virtual bool has_gradient() const { return false; }
  /// d f / d x_i for every feature; throws capability_error unless
  /// has_gradient(). Wrap with FiniteDifferenceModel for a numeric one.
  virtual std::vector<double> gradient(const FeatureVector& x) const;

  virtual const ShapeProfile& shape() const = 0;

  /// Shared name list for building inputs aligned with this model.
  FeatureVector::NamesPtr names_handle() const;

  /// Throws contract_violation unless x matches this model's features.
  void require_compatible(const FeatureVector& x) const;
};

/// Ad-hoc model around plain callables; the workhorse for tests and for
/// synthetic constructions in the audits.
class FunctionModel : public PricingModel {
 public:
  using ValueFn = std::function<double(const std::vector<double>&)>;
  using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

  FunctionModel(std::vector<std::string> names, ValueFn value);
  FunctionModel(std::vector<std::string> names, ValueFn value, GradientFn grad);

  std::size_t n_features() const override { return names_->size(); }
  const std::vector<std::string>& names() const override { return *names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return static_cast<bool>(grad_); }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

  void declare_shape(ShapeProfile shape);

 private:
  FeatureVector::NamesPtr names_;
  ValueFn value_;
  GradientFn grad_;
  ShapeProfile shape_;
};

/// Adds a central-difference gradient (step 1e-6 * max(1, |x_i|)) on top
/// of any model.
class FiniteDifferenceModel : public PricingModel {
 public:
  explicit FiniteDifferenceModel(std::shared_ptr<const PricingModel> base,
                                 double relative_step = 1e-6);

  std::size_t n_features() const override { return base_->n_features(); }
  const std::vector<std::string>& names() const override { return base_->names(); }
  double evaluate(const FeatureVector& x) const override { return base_->evaluate(x); }
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return base_->shape(); }

 private:
  std::shared_ptr<const PricingModel> base_;
  double rel_step_;
};

/// Restriction of a model to a subset of its features, the rest pinned at
/// fixed values. Doubles as the dummy-removal reduction in the
/// generalized-dummy audit.
class SliceModel : public PricingModel {
 public:
  /// `pinned` holds (base feature index, fixed value) pairs; every other
  /// base feature stays free, in base order.
  SliceModel(std::shared_ptr<const PricingModel> base,
             std::vector<std::pair<std::size_t, double>> pinned);

  std::size_t n_features() const override { return free_names_->size(); }
  const std::vector<std::string>& names() const override { return *free_names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return base_->has_gradient(); }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

  /// Free-feature indices back in base coordinates.
  const std::vector<std::size_t>& free_indices() const { return free_; }
  FeatureVector embed(const FeatureVector& x) const;

 private:
  std::shared_ptr<const PricingModel> base_;
  std::vector<double> pinned_values_;   // full base length
  std::vector<bool> is_pinned_;
  std::vector<std::size_t> free_;
  FeatureVector::NamesPtr free_names_;
  ShapeProfile shape_;
};

/// Appends an inert feature the base model never reads; used to exercise
/// the generalized-dummy audit.
class AppendDummyModel : public PricingModel {
 public:
  AppendDummyModel(std::shared_ptr<const PricingModel> base, std::string dummy_name);

  std::size_t n_features() const override { return names_->size(); }
  const std::vector<std::string>& names() const override { return *names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return base_->has_gradient(); }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

 private:
  FeatureVector strip(const FeatureVector& x) const;

  std::shared_ptr<const PricingModel> base_;
  FeatureVector::NamesPtr names_;
  ShapeProfile shape_;
};

}  // namespace riskattr
