// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "riskattr/models.hpp"

namespace riskattr {

/// One option transaction row: the five pricing features plus the
/// observed price. Rates are stored as decimals regardless of how the
/// source file declared them.
struct OptionRecord {
  double S = 0.0;
  double r = 0.0;
  double tau = 0.0;
  double K = 0.0;
  double sigma = 0.0;
  double price = 0.0;
  OptionKind kind = OptionKind::call;
  std::size_t source_row = 0;  // 1-based line in the source file, 0 if synthetic

  /// Throws validation_error on an invariant breach (S,K,tau,sigma > 0,
  /// price >= 0).
  void validate() const;

  std::vector<double> features() const { return {S, r, tau, K, sigma}; }
};

}  // namespace riskattr
