// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace riskattr {

enum class QuadratureRule { trapezoid, gauss_legendre };

std::string to_string(QuadratureRule r);
QuadratureRule quadrature_rule_from_string(const std::string& s);

struct QuadratureConfig {
  QuadratureRule rule = QuadratureRule::trapezoid;
  int points = 256;
  /// Re-run at twice the points and report the max attribution change.
  bool refine_check = false;
};

/// Nodes and weights for integrating over [0, 1]. Trapezoid nodes include
/// both endpoints; Gauss-Legendre nodes are computed by Newton iteration
/// on the Legendre recurrence.
struct QuadratureNodes {
  std::vector<double> t;
  std::vector<double> w;
};

QuadratureNodes quadrature_nodes(QuadratureRule rule, int points);

}  // namespace riskattr
