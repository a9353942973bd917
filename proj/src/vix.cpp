// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/vix.hpp"

#include <cmath>
#include <string>

#include "riskattr/errors.hpp"

namespace riskattr {

void VixInput::validate() const {
  if (strikes.size() < 2) throw contract_violation("VixInput: need at least two strikes");
  for (std::size_t i = 0; i < strikes.size(); ++i) {
    if (!std::isfinite(strikes[i]) || strikes[i] <= 0.0)
      throw contract_violation("VixInput: strikes must be positive and finite");
    if (i > 0 && strikes[i] <= strikes[i - 1])
      throw contract_violation("VixInput: strikes must be strictly ascending");
  }
  if (put_quotes.size() + call_quotes.size() != strikes.size())
    throw contract_violation("VixInput: quote counts do not partition the strikes");
  for (double q : put_quotes)
    if (!std::isfinite(q) || q < 0.0) throw contract_violation("VixInput: negative put quote");
  for (double q : call_quotes)
    if (!std::isfinite(q) || q < 0.0) throw contract_violation("VixInput: negative call quote");
  if (!std::isfinite(forward) || forward < strikes.front() || forward > strikes.back())
    throw contract_violation("VixInput: forward outside the strike range");
  for (std::size_t i = 0; i < put_quotes.size(); ++i)
    if (strikes[i] > forward)
      throw contract_violation("VixInput: put quote above the forward");
  if (!std::isfinite(tau) || tau <= 0.0) throw contract_violation("VixInput: tau must be positive");
  if (!std::isfinite(rate)) throw contract_violation("VixInput: rate must be finite");
}

double vix_from_chain(const VixInput& input) {
  input.validate();
  const std::size_t n_puts = input.put_quotes.size();
  const std::size_t n_calls = input.call_quotes.size();
  if (n_puts < 3 || n_calls < 3)
    throw insufficient_chain_error("vix_from_chain: need at least 3 strikes on each side "
                                   "of the forward (have " + std::to_string(n_puts) +
                                   " puts, " + std::to_string(n_calls) + " calls)");

  // Integrand Q(K)/K^2 with Q the OTM quote at each strike.
  const std::size_t n = input.strikes.size();
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = i < n_puts ? input.put_quotes[i] : input.call_quotes[i - n_puts];
    g[i] = q / (input.strikes[i] * input.strikes[i]);
  }

  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    integral += 0.5 * (g[i] + g[i + 1]) * (input.strikes[i + 1] - input.strikes[i]);

  const double var = 2.0 * std::exp(input.rate * input.tau) / input.tau * integral;
  return std::sqrt(var);
}

}  // namespace riskattr
