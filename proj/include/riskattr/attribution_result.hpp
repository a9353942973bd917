// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskattr/feature_vector.hpp"

namespace riskattr {

enum class Method { bshap, ig };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Per-feature attribution values plus the bookkeeping the auditors need:
/// which points the model was actually evaluated at, and how far the
/// attribution sum is from f(explicand) - f(baseline).
struct AttributionResult {
  Method method = Method::bshap;
  std::vector<double> attributions;
  FeatureVector explicand;
  FeatureVector baseline;
  double completeness_residual = 0.0;
  std::vector<FeatureVector> evaluation_points;
  std::size_t n_model_evals = 0;
  /// Max attribution change when re-run at twice the quadrature points
  /// (set only when QuadratureConfig::refine_check is on).
  std::optional<double> refinement_delta;

  double sum() const;
};

}  // namespace riskattr
