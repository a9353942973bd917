// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riskattr/feature_vector.hpp"

namespace riskattr {

enum class DomainMode { axis_box, hull2d, point_cloud };

std::string to_string(DomainMode m);
DomainMode domain_mode_from_string(const std::string& s);

/// Geometric stand-in for the training region, answering membership
/// queries for the convex-geometry audit.
///
///  - axis_box: per-feature [lo, hi].
///  - hull2d: 2D convex hull over two designated features plus box bounds
///    on the rest. A degenerate (collinear) hull is a segment with
///    thickness tolerance 1e-9.
///  - point_cloud: min-max normalized points with membership radius rho.
///    This mode extends past the convex-geometry axiom's letter; reports
///    label it "extended-CG".
class TrainingDomain {
 public:
  DomainMode mode() const { return mode_; }
  const std::vector<std::string>& names() const { return *names_; }

  bool contains(const FeatureVector& x) const;
  bool contains(const std::vector<double>& coords) const;

  // construction helpers (use fit_domain for the cloud-driven cases)
  static TrainingDomain axis_box(FeatureVector::NamesPtr names, std::vector<double> lo,
                                 std::vector<double> hi);
  static TrainingDomain hull2d(FeatureVector::NamesPtr names, std::size_t feat_a,
                               std::size_t feat_b, std::vector<std::array<double, 2>> hull,
                               std::vector<double> box_lo, std::vector<double> box_hi);
  static TrainingDomain point_cloud(FeatureVector::NamesPtr names,
                                    std::vector<std::vector<double>> normalized_points,
                                    std::vector<double> lo, std::vector<double> hi, double rho);

  // introspection for serialization
  const std::vector<double>& box_lo() const { return box_lo_; }
  const std::vector<double>& box_hi() const { return box_hi_; }
  const std::vector<std::array<double, 2>>& hull() const { return hull_; }
  std::pair<std::size_t, std::size_t> hull_features() const { return {feat_a_, feat_b_}; }
  const std::vector<std::vector<double>>& cloud() const { return cloud_; }
  double rho() const { return rho_; }

 private:
  TrainingDomain() = default;

  DomainMode mode_ = DomainMode::axis_box;
  FeatureVector::NamesPtr names_;
  std::vector<double> box_lo_, box_hi_;
  std::size_t feat_a_ = 0, feat_b_ = 1;
  std::vector<std::array<double, 2>> hull_;  // counterclockwise
  std::vector<std::vector<double>> cloud_;   // normalized to [0,1]
  double rho_ = 0.05;
};

/// Fits a membership region to training points. hull_features only
/// matters in hull2d mode; rho only in point_cloud mode.
TrainingDomain fit_domain(const std::vector<FeatureVector>& points, DomainMode mode,
                          std::pair<std::size_t, std::size_t> hull_features = {0, 1},
                          double rho = 0.05);

/// Monotone-chain convex hull, counterclockwise, no duplicate endpoint.
/// Collinear inputs yield the two extreme points.
std::vector<std::array<double, 2>> convex_hull_2d(std::vector<std::array<double, 2>> pts);

/// Seeded synthetic (S, sigma) cloud with a Gaussian-copula rank
/// correlation close to `correlation` (negative: the leverage effect).
/// Extra features, when given, are sampled uniformly in their ranges.
std::vector<FeatureVector> generate_leverage_data(
    std::size_t n_points, std::pair<double, double> s_range,
    std::pair<double, double> sigma_range, double correlation, std::uint64_t seed,
    const std::vector<std::pair<std::string, std::pair<double, double>>>& extras = {});

/// Spearman rank correlation of two equally long samples.
double rank_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace riskattr
