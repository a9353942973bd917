// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "riskattr/errors.hpp"

namespace riskattr {

std::string to_string(QuadratureRule r) {
  return r == QuadratureRule::trapezoid ? "trapezoid" : "gauss-legendre";
}

QuadratureRule quadrature_rule_from_string(const std::string& s) {
  if (s == "trapezoid") return QuadratureRule::trapezoid;
  if (s == "gauss-legendre" || s == "gauss_legendre") return QuadratureRule::gauss_legendre;
  throw contract_violation("unknown quadrature rule '" + s + "'");
}

namespace {

QuadratureNodes trapezoid_nodes(int m) {
  QuadratureNodes q;
  q.t.resize(m);
  q.w.resize(m);
  const double h = 1.0 / static_cast<double>(m - 1);
  for (int k = 0; k < m; ++k) {
    q.t[k] = static_cast<double>(k) * h;
    q.w[k] = (k == 0 || k == m - 1) ? 0.5 * h : h;
  }
  q.t.back() = 1.0;
  return q;
}

// Legendre roots on [-1,1] by Newton, mapped to [0,1].
QuadratureNodes gauss_legendre_nodes_01(int n) {
  QuadratureNodes q;
  q.t.resize(n);
  q.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 1; i <= m; ++i) {
    double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    // map x in [-1,1] -> t in [0,1]
    q.t[i - 1] = 0.5 * (1.0 - z);
    q.t[n - i] = 0.5 * (1.0 + z);
    q.w[i - 1] = 0.5 * w;
    q.w[n - i] = 0.5 * w;
  }
  return q;
}

}  // namespace

QuadratureNodes quadrature_nodes(QuadratureRule rule, int points) {
  if (points < 2) throw contract_violation("quadrature_nodes: need at least 2 points");
  return rule == QuadratureRule::trapezoid ? trapezoid_nodes(points)
                                           : gauss_legendre_nodes_01(points);
}

}  // namespace riskattr
