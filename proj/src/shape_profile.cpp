// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/shape_profile.hpp"

#include "riskattr/errors.hpp"

namespace riskattr {

int ShapeProfile::direction(std::size_t i) const {
  if (monotone_increasing.count(i)) return 1;
  if (monotone_decreasing.count(i)) return -1;
  return 0;
}

Curvature ShapeProfile::curvature_of(std::size_t i) const {
  return i < curvature.size() ? curvature[i] : Curvature::none;
}

void ShapeProfile::validate(std::size_t n_features) const {
  for (std::size_t i : monotone_increasing) {
    if (i >= n_features) throw contract_violation("ShapeProfile: index out of range");
    if (monotone_decreasing.count(i))
      throw contract_violation("ShapeProfile: feature " + std::to_string(i) +
                               " flagged both increasing and decreasing");
  }
  for (std::size_t i : monotone_decreasing)
    if (i >= n_features) throw contract_violation("ShapeProfile: index out of range");
  if (!curvature.empty() && curvature.size() != n_features)
    throw contract_violation("ShapeProfile: curvature list length mismatch");
  for (std::size_t i = 0; i < curvature.size(); ++i) {
    switch (curvature[i]) {
      case Curvature::none:
        break;
      case Curvature::dme:
      case Curvature::ime:
        if (!monotone_increasing.count(i))
          throw contract_violation("ShapeProfile: DME/IME flag requires monotone_increasing");
        break;
      case Curvature::rdme:
        if (!monotone_decreasing.count(i))
          throw contract_violation("ShapeProfile: RDME flag requires monotone_decreasing");
        break;
    }
  }
}

ShapeProfile ShapeProfile::none_declared(std::size_t n_features) {
  ShapeProfile p;
  p.curvature.assign(n_features, Curvature::none);
  return p;
}

std::string to_string(Curvature c) {
  switch (c) {
    case Curvature::dme: return "dme";
    case Curvature::ime: return "ime";
    case Curvature::rdme: return "rdme";
    default: return "none";
  }
}

}  // namespace riskattr
