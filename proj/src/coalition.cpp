// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/coalition.hpp"

#include <bit>
#include <string>

#include "riskattr/errors.hpp"

namespace riskattr {

Coalition Coalition::full_set(std::size_t n) {
  if (n > kMaxCoalitionPlayers)
    throw contract_violation("Coalition: n exceeds " + std::to_string(kMaxCoalitionPlayers));
  if (n == 0) return Coalition(0);
  return Coalition(static_cast<std::uint32_t>((1ull << n) - 1ull));
}

Coalition Coalition::of(std::initializer_list<std::size_t> members, std::size_t n) {
  std::uint32_t bits = 0;
  for (std::size_t i : members) {
    if (i >= n) throw contract_violation("Coalition: member index out of range");
    bits |= (1u << i);
  }
  return Coalition(bits);
}

std::size_t Coalition::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

FeatureVector coalition_substitute(const FeatureVector& explicand,
                                   const FeatureVector& baseline, Coalition s) {
  if (!explicand.same_names(baseline))
    throw contract_violation("coalition_substitute: explicand and baseline carry "
                             "different feature-name lists");
  const std::size_t n = explicand.size();
  if (n > kMaxCoalitionPlayers)
    throw contract_violation("coalition_substitute: too many features");
  if (n < 32 && (s.bits() >> n) != 0)
    throw contract_violation("coalition_substitute: coalition member out of range");

  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = s.contains(i) ? explicand.value(i) : baseline.value(i);
  return FeatureVector(explicand.names_handle(), std::move(z));
}

double shapley_weight(std::size_t subset_size, std::size_t n) {
  if (n < 1 || n > kMaxCoalitionPlayers)
    throw contract_violation("shapley_weight: n must be in [1, " +
                             std::to_string(kMaxCoalitionPlayers) + "]");
  if (subset_size >= n)
    throw contract_violation("shapley_weight: subset size must be < n");

  // |S|!(n-|S|-1)!/n! == 1 / (n * C(n-1, |S|)); the binomial stays below
  // C(19,9) ~ 9.2e4 so every intermediate is exact.
  double binom = 1.0;
  for (std::size_t j = 1; j <= subset_size; ++j)
    binom = binom * static_cast<double>(n - 1 - (j - 1)) / static_cast<double>(j);
  return 1.0 / (static_cast<double>(n) * binom);
}

}  // namespace riskattr
