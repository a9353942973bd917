// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "riskattr/errors.hpp"
#include "riskattr/models.hpp"
#include "riskattr/rng.hpp"

namespace riskattr {

std::string to_string(DomainMode m) {
  switch (m) {
    case DomainMode::axis_box: return "axis-box";
    case DomainMode::hull2d: return "hull2d";
    default: return "point-cloud";
  }
}

DomainMode domain_mode_from_string(const std::string& s) {
  if (s == "axis-box" || s == "axis_box" || s == "box") return DomainMode::axis_box;
  if (s == "hull2d") return DomainMode::hull2d;
  if (s == "point-cloud" || s == "point_cloud" || s == "cloud") return DomainMode::point_cloud;
  throw contract_violation("unknown domain mode '" + s + "'");
}

namespace {

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist_point_segment(const std::array<double, 2>& p, const std::array<double, 2>& a,
                          const std::array<double, 2>& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
  const double px = a[0] + t * dx - p[0], py = a[1] + t * dy - p[1];
  return std::sqrt(px * px + py * py);
}

}  // namespace

std::vector<std::array<double, 2>> convex_hull_2d(std::vector<std::array<double, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<std::array<double, 2>> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// ---------------------------------------------------------------------------

TrainingDomain TrainingDomain::axis_box(FeatureVector::NamesPtr names, std::vector<double> lo,
                                        std::vector<double> hi) {
  if (!names || lo.size() != names->size() || hi.size() != names->size())
    throw contract_violation("TrainingDomain: box bounds length mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw contract_violation("TrainingDomain: box lo > hi");
  TrainingDomain d;
  d.mode_ = DomainMode::axis_box;
  d.names_ = std::move(names);
  d.box_lo_ = std::move(lo);
  d.box_hi_ = std::move(hi);
  return d;
}

TrainingDomain TrainingDomain::hull2d(FeatureVector::NamesPtr names, std::size_t feat_a,
                                      std::size_t feat_b,
                                      std::vector<std::array<double, 2>> hull,
                                      std::vector<double> box_lo, std::vector<double> box_hi) {
  if (!names || feat_a >= names->size() || feat_b >= names->size() || feat_a == feat_b)
    throw contract_violation("TrainingDomain: bad hull feature pair");
  if (hull.size() < 2) throw contract_violation("TrainingDomain: hull needs >= 2 vertices");
  // convexity check: all turns left (or collinear) for >= 3 vertices
  if (hull.size() >= 3) {
    const std::size_t m = hull.size();
    for (std::size_t i = 0; i < m; ++i)
      if (cross(hull[i], hull[(i + 1) % m], hull[(i + 2) % m]) < 0.0)
        throw contract_violation("TrainingDomain: hull vertices are not convex/ccw");
  }
  TrainingDomain d;
  d.mode_ = DomainMode::hull2d;
  d.names_ = std::move(names);
  d.feat_a_ = feat_a;
  d.feat_b_ = feat_b;
  d.hull_ = std::move(hull);
  d.box_lo_ = std::move(box_lo);
  d.box_hi_ = std::move(box_hi);
  if (d.box_lo_.size() != d.names_->size() || d.box_hi_.size() != d.names_->size())
    throw contract_violation("TrainingDomain: box bounds length mismatch");
  return d;
}

TrainingDomain TrainingDomain::point_cloud(FeatureVector::NamesPtr names,
                                           std::vector<std::vector<double>> normalized_points,
                                           std::vector<double> lo, std::vector<double> hi,
                                           double rho) {
  if (!names) throw contract_violation("TrainingDomain: null names");
  if (!(rho > 0.0)) throw contract_violation("TrainingDomain: rho must be positive");
  TrainingDomain d;
  d.mode_ = DomainMode::point_cloud;
  d.names_ = std::move(names);
  d.cloud_ = std::move(normalized_points);
  d.box_lo_ = std::move(lo);
  d.box_hi_ = std::move(hi);
  d.rho_ = rho;
  return d;
}

bool TrainingDomain::contains(const FeatureVector& x) const {
  if (x.size() != names_->size())
    throw contract_violation("TrainingDomain: dimension mismatch");
  return contains(x.values());
}

bool TrainingDomain::contains(const std::vector<double>& c) const {
  if (c.size() != names_->size())
    throw contract_violation("TrainingDomain: dimension mismatch");
  switch (mode_) {
    case DomainMode::axis_box: {
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double eps = 1e-9 * std::max(1.0, std::fabs(box_hi_[i] - box_lo_[i]));
        if (c[i] < box_lo_[i] - eps || c[i] > box_hi_[i] + eps) return false;
      }
      return true;
    }
    case DomainMode::hull2d: {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == feat_a_ || i == feat_b_) continue;
        const double eps = 1e-9 * std::max(1.0, std::fabs(box_hi_[i] - box_lo_[i]));
        if (c[i] < box_lo_[i] - eps || c[i] > box_hi_[i] + eps) return false;
      }
      const std::array<double, 2> p{c[feat_a_], c[feat_b_]};
      double scale = 1.0;
      for (const auto& v : hull_)
        scale = std::max({scale, std::fabs(v[0]), std::fabs(v[1])});
      const double eps = 1e-9 * scale;
      if (hull_.size() == 1)
        return std::hypot(p[0] - hull_[0][0], p[1] - hull_[0][1]) <= eps;
      if (hull_.size() == 2) return dist_point_segment(p, hull_[0], hull_[1]) <= eps;
      for (std::size_t i = 0; i < hull_.size(); ++i)
        if (cross(hull_[i], hull_[(i + 1) % hull_.size()], p) < -eps) return false;
      return true;
    }
    default: {
      // nearest neighbour within rho in normalized coordinates
      std::vector<double> z(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double span = box_hi_[i] - box_lo_[i];
        z[i] = span > 0.0 ? (c[i] - box_lo_[i]) / span : 0.0;
      }
      for (const auto& q : cloud_) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) d2 += (z[i] - q[i]) * (z[i] - q[i]);
        if (d2 <= rho_ * rho_) return true;
      }
      return false;
    }
  }
}

// ---------------------------------------------------------------------------

TrainingDomain fit_domain(const std::vector<FeatureVector>& points, DomainMode mode,
                          std::pair<std::size_t, std::size_t> hull_features, double rho) {
  if (points.size() < 3)
    throw insufficient_data_error("fit_domain: need at least 3 points");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n || !p.same_names(points.front()))
      throw contract_violation("fit_domain: inconsistent point dimensions");

  std::vector<double> lo(n, std::numeric_limits<double>::infinity());
  std::vector<double> hi(n, -std::numeric_limits<double>::infinity());
  for (const auto& p : points)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p.value(i));
      hi[i] = std::max(hi[i], p.value(i));
    }

  auto names = points.front().names_handle();
  switch (mode) {
    case DomainMode::axis_box:
      return TrainingDomain::axis_box(names, std::move(lo), std::move(hi));
    case DomainMode::hull2d: {
      const auto [a, b] = hull_features;
      if (a >= n || b >= n || a == b)
        throw contract_violation("fit_domain: bad hull feature pair");
      std::vector<std::array<double, 2>> xy;
      xy.reserve(points.size());
      for (const auto& p : points) xy.push_back({p.value(a), p.value(b)});
      return TrainingDomain::hull2d(names, a, b, convex_hull_2d(std::move(xy)),
                                    std::move(lo), std::move(hi));
    }
    default: {
      std::vector<std::vector<double>> cloud;
      cloud.reserve(points.size());
      for (const auto& p : points) {
        std::vector<double> z(n);
        for (std::size_t i = 0; i < n; ++i) {
          const double span = hi[i] - lo[i];
          z[i] = span > 0.0 ? (p.value(i) - lo[i]) / span : 0.0;
        }
        cloud.push_back(std::move(z));
      }
      return TrainingDomain::point_cloud(names, std::move(cloud), std::move(lo),
                                         std::move(hi), rho);
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<FeatureVector> generate_leverage_data(
    std::size_t n_points, std::pair<double, double> s_range,
    std::pair<double, double> sigma_range, double correlation, std::uint64_t seed,
    const std::vector<std::pair<std::string, std::pair<double, double>>>& extras) {
  if (n_points < 10) throw contract_violation("generate_leverage_data: need >= 10 points");
  if (!(correlation > -1.0 && correlation < 0.0))
    throw contract_violation("generate_leverage_data: correlation must be in (-1, 0)");
  if (!(s_range.second > s_range.first) || !(sigma_range.second > sigma_range.first))
    throw contract_violation("generate_leverage_data: empty range");

  // Gaussian copula: choose the normal correlation that produces the
  // requested Spearman value, rho_s = (6/pi) asin(rho_g / 2).
  const double rho_g = 2.0 * std::sin(std::numbers::pi * correlation / 6.0);
  const double mix = std::sqrt(1.0 - rho_g * rho_g);

  std::vector<std::string> names{"S", "sigma"};
  for (const auto& [name, range] : extras) {
    (void)range;
    names.push_back(name);
  }
  auto names_ptr = FeatureVector::make_names(std::move(names));

  Rng rng(seed);
  std::vector<FeatureVector> out;
  out.reserve(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double z1 = rng.normal();
    const double z2 = rho_g * z1 + mix * rng.normal();
    std::vector<double> vals;
    vals.reserve(2 + extras.size());
    vals.push_back(s_range.first + norm_cdf(z1) * (s_range.second - s_range.first));
    vals.push_back(sigma_range.first + norm_cdf(z2) * (sigma_range.second - sigma_range.first));
    for (const auto& [name, range] : extras) {
      (void)name;
      vals.push_back(rng.uniform(range.first, range.second));
    }
    out.emplace_back(names_ptr, std::move(vals));
  }
  return out;
}

double rank_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw contract_violation("rank_correlation: need two equally long samples");
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::vector<double> r(v.size());
    for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k);
    return r;
  };
  const std::vector<double> ra = ranks(a), rb = ranks(b);
  const double mean = (static_cast<double>(a.size()) - 1.0) / 2.0;
  double num = 0.0, da = 0.0, db = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (ra[i] - mean) * (rb[i] - mean);
    da += (ra[i] - mean) * (ra[i] - mean);
    db += (rb[i] - mean) * (rb[i] - mean);
  }
  return num / std::sqrt(da * db);
}

}  // namespace riskattr
