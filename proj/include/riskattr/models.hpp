// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "riskattr/pricing_model.hpp"

namespace riskattr {

enum class OptionKind { call, put };

std::string to_string(OptionKind k);
OptionKind option_kind_from_string(const std::string& s);

/// Standard normal CDF (erf-based, abs error well under 1e-10) and PDF.
double norm_cdf(double x);
double norm_pdf(double x);

/// Present value of a zero coupon bond paying c at T under a flat
/// continuously compounded rate r.
double bond_price(double r, double c, double T);

/// European option price; tau or sigma below 1e-12 fall back to the
/// discounted-intrinsic limit.
double bsm_price(double S, double K, double r, double tau, double sigma, OptionKind kind);

struct Greeks {
  double delta = 0.0;
  double vega = 0.0;
  double rho = 0.0;
  double gamma = 0.0;
  double vomma = 0.0;
};

Greeks bsm_greeks(double S, double K, double r, double tau, double sigma, OptionKind kind);

/// Two-feature (r, c) bond model with the maturity fixed as a parameter.
/// Declared shape: r decreasing with RDME, c increasing.
class BondModel : public PricingModel {
 public:
  explicit BondModel(double maturity_years);

  std::size_t n_features() const override { return 2; }
  const std::vector<std::string>& names() const override { return *names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

  double maturity() const { return maturity_; }

 private:
  double maturity_;
  FeatureVector::NamesPtr names_;
  ShapeProfile shape_;
};

/// Five-feature (S, r, tau, K, sigma) Black-Scholes-Merton pricer with
/// closed-form gradient.
class BsmModel : public PricingModel {
 public:
  explicit BsmModel(OptionKind kind);

  std::size_t n_features() const override { return 5; }
  const std::vector<std::string>& names() const override { return *names_; }
  double evaluate(const FeatureVector& x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> gradient(const FeatureVector& x) const override;
  const ShapeProfile& shape() const override { return shape_; }

  OptionKind kind() const { return kind_; }

  /// Canonical feature order used across the CLI and file formats.
  static const std::vector<std::string>& feature_names();

 private:
  OptionKind kind_;
  FeatureVector::NamesPtr names_;
  ShapeProfile shape_;
};

}  // namespace riskattr
