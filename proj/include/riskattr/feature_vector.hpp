// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace riskattr {

/// Ordered, named real vector. The common currency for explicands,
/// baselines and model evaluation points.
///
/// Instances are immutable after construction; the name list is shared so
/// that the many points produced by an attribution run stay cheap to copy.
class FeatureVector {
 public:
  using NamesPtr = std::shared_ptr<const std::vector<std::string>>;

  /// Empty (zero-feature) vector.
  FeatureVector();
  FeatureVector(std::vector<std::string> names, std::vector<double> values);
  FeatureVector(NamesPtr names, std::vector<double> values);

  /// Builds a shared name list usable across many vectors.
  static NamesPtr make_names(std::vector<std::string> names);

  std::size_t size() const { return values_.size(); }
  double value(std::size_t i) const { return values_.at(i); }
  const std::vector<double>& values() const { return values_; }
  const std::string& name(std::size_t i) const { return (*names_).at(i); }
  const std::vector<std::string>& names() const { return *names_; }
  const NamesPtr& names_handle() const { return names_; }

  /// Optional per-feature unit tags, e.g. "years" or "decimal".
  const std::vector<std::string>* units() const { return units_.get(); }
  void set_units(std::vector<std::string> units);

  /// Index of a named feature; throws contract_violation when absent.
  std::size_t index_of(const std::string& name) const;

  /// Copy with one coordinate replaced (names shared).
  FeatureVector with_value(std::size_t i, double v) const;

  /// True when both vectors carry identical name lists.
  bool same_names(const FeatureVector& other) const;

  bool operator==(const FeatureVector& other) const;

 private:
  void validate() const;

  NamesPtr names_;
  std::vector<double> values_;
  std::shared_ptr<const std::vector<std::string>> units_;
};

}  // namespace riskattr
