// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace riskattr {

/// Second-order flag a model declares per feature. DME: increasing and
/// concave. IME: increasing and convex. RDME: decreasing and convex.
enum class Curvature { none, dme, ime, rdme };

/// First- and second-order monotonicity declarations consumed by the
/// axiom auditors. Flags are declared by the model author (or verified by
/// sampling), never learned.
struct ShapeProfile {
  std::set<std::size_t> monotone_increasing;
  std::set<std::size_t> monotone_decreasing;
  std::vector<Curvature> curvature;  // empty or one flag per feature

  /// +1 increasing, -1 decreasing, 0 undeclared.
  int direction(std::size_t i) const;
  Curvature curvature_of(std::size_t i) const;

  /// Checks internal consistency against a feature count; throws
  /// contract_violation on conflicting flags.
  void validate(std::size_t n_features) const;

  static ShapeProfile none_declared(std::size_t n_features);
};

std::string to_string(Curvature c);

}  // namespace riskattr
