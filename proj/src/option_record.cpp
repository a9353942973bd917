// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/option_record.hpp"

#include <cmath>
#include <string>

#include "riskattr/errors.hpp"

namespace riskattr {

void OptionRecord::validate() const {
  auto fail = [this](const std::string& what) {
    const std::string where =
        source_row ? " (row " + std::to_string(source_row) + ")" : "";
    throw validation_error("option record" + where + ": " + what);
  };
  for (double v : {S, r, tau, K, sigma, price})
    if (!std::isfinite(v)) fail("non-finite field");
  if (S <= 0.0) fail("S must be positive");
  if (K <= 0.0) fail("K must be positive");
  if (tau <= 0.0) fail("tau must be positive");
  if (sigma <= 0.0) fail("sigma must be positive");
  if (price < 0.0) fail("price must be >= 0");
}

}  // namespace riskattr
