// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>

#include "riskattr/feature_vector.hpp"

namespace riskattr {

/// Exact coalition machinery is capped at this many players.
inline constexpr std::size_t kMaxCoalitionPlayers = 20;

/// A subset of the player set {0..n-1}, stored as a bitmask.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::uint32_t bits) : bits_(bits) {}

  static Coalition empty_set() { return Coalition(0); }
  static Coalition full_set(std::size_t n);
  static Coalition of(std::initializer_list<std::size_t> members, std::size_t n);

  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  Coalition with(std::size_t i) const { return Coalition(bits_ | (1u << i)); }
  Coalition without(std::size_t i) const { return Coalition(bits_ & ~(1u << i)); }
  std::size_t size() const;
  std::uint32_t bits() const { return bits_; }

  bool operator==(const Coalition&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Splices explicand coordinates for coalition members over baseline
/// coordinates elsewhere: the argument of the coalition value function.
FeatureVector coalition_substitute(const FeatureVector& explicand,
                                   const FeatureVector& baseline, Coalition s);

/// |S|! (n-|S|-1)! / n! computed by incremental rational products, exact
/// in double for n <= 20.
double shapley_weight(std::size_t subset_size, std::size_t n);

}  // namespace riskattr
