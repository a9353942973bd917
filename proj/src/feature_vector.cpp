// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/feature_vector.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "riskattr/errors.hpp"

namespace riskattr {

FeatureVector::FeatureVector()
    : names_(std::make_shared<const std::vector<std::string>>()) {}

FeatureVector::FeatureVector(std::vector<std::string> names, std::vector<double> values)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))),
      values_(std::move(values)) {
  validate();
}

FeatureVector::FeatureVector(NamesPtr names, std::vector<double> values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (!names_) throw contract_violation("FeatureVector: null name list");
  validate();
}

FeatureVector::NamesPtr FeatureVector::make_names(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

void FeatureVector::validate() const {
  if (names_->size() != values_.size())
    throw contract_violation("FeatureVector: names and values differ in length (" +
                             std::to_string(names_->size()) + " vs " +
                             std::to_string(values_.size()) + ")");
  std::unordered_set<std::string> seen;
  for (const auto& n : *names_)
    if (!seen.insert(n).second)
      throw contract_violation("FeatureVector: duplicate feature name '" + n + "'");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw contract_violation("FeatureVector: non-finite value for feature '" +
                               (*names_)[i] + "'");
}

void FeatureVector::set_units(std::vector<std::string> units) {
  if (units.size() != values_.size())
    throw contract_violation("FeatureVector: unit list length mismatch");
  units_ = std::make_shared<const std::vector<std::string>>(std::move(units));
}

std::size_t FeatureVector::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end())
    throw contract_violation("FeatureVector: no feature named '" + name + "'");
  return static_cast<std::size_t>(it - names_->begin());
}

FeatureVector FeatureVector::with_value(std::size_t i, double v) const {
  std::vector<double> vals = values_;
  vals.at(i) = v;
  return FeatureVector(names_, std::move(vals));
}

bool FeatureVector::same_names(const FeatureVector& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

bool FeatureVector::operator==(const FeatureVector& other) const {
  return same_names(other) && values_ == other.values_;
}

}  // namespace riskattr
