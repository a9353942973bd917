// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "riskattr/attribution_result.hpp"
#include "riskattr/pricing_model.hpp"
#include "riskattr/quadrature.hpp"

namespace riskattr {

/// Exact Baseline Shapley by full coalition enumeration (n <= 20). All
/// 2^n substituted corner points are evaluated once, memoized by coalition
/// bitmask, and recorded in the result for domain auditing.
AttributionResult bshap(const PricingModel& model, const FeatureVector& explicand,
                        const FeatureVector& baseline);

/// Straight-path Integrated Gradients via the configured quadrature rule.
/// The model must supply a gradient; wrap gradient-free models in
/// FiniteDifferenceModel first. The completeness residual is reported as
/// observed, never redistributed.
AttributionResult integrated_gradients(const PricingModel& model,
                                       const FeatureVector& explicand,
                                       const FeatureVector& baseline,
                                       const QuadratureConfig& config = {});

/// Closed-form IG attribution of the rate feature for the zero coupon
/// bond against a zero baseline:
///   c (e^{-a} + e^{-a}/a - 1/a),  a = r T,
/// with the series limit -c a / 2 below a = 1e-8.
double ig_bond_closed_form(double r, double c, double T);

/// Method dispatch used by the auditors: one knob selecting BShap or IG
/// plus the quadrature setup. Gradient-free models are wrapped with
/// central differences automatically when IG is selected.
struct AttributionEngine {
  Method method = Method::bshap;
  QuadratureConfig quad{};

  AttributionResult run(const PricingModel& model, const FeatureVector& explicand,
                        const FeatureVector& baseline) const;
};

}  // namespace riskattr
