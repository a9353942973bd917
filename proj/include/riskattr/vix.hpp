// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace riskattr {

/// Out-of-the-money option chain for the model-free variance integral.
/// put_quotes cover the strikes at or below the forward F, call_quotes the
/// strikes above it; together they match `strikes` front to back.
struct VixInput {
  std::vector<double> strikes;  // strictly ascending, positive
  std::vector<double> put_quotes;
  std::vector<double> call_quotes;
  double forward = 0.0;  // 30-day forward level F
  double rate = 0.0;     // decimal
  double tau = 30.0 / 365.0;

  void validate() const;
};

/// Discretizes
///   VIX = sqrt( (2 e^{r tau} / tau) ( int_0^F P(K)/K^2 dK
///                                   + int_F^inf C(K)/K^2 dK ) )
/// by the trapezoid rule over the provided strikes, truncating both
/// integrals at the chain edges. No forward-adjustment term is applied.
double vix_from_chain(const VixInput& input);

}  // namespace riskattr
