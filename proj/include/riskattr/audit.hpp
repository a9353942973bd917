// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riskattr/attribution.hpp"
#include "riskattr/domain.hpp"
#include "riskattr/pricing_model.hpp"

namespace riskattr {

enum class Axiom { aim, dim, dme, rdme, ime, fmd, gd, cg };
enum class Verdict { pass, violated, not_applicable };

std::string to_string(Axiom a);
std::string to_string(Verdict v);
Axiom axiom_from_string(const std::string& s);

/// One grid sweep of a single feature: the tested coordinate runs over
/// `values` while every other explicand coordinate is frozen at `context`.
struct AuditGrid {
  std::size_t feature_index = 0;
  std::vector<double> values;   // ascending
  FeatureVector context;        // explicand template
  FeatureVector baseline;
  std::vector<double> deltas;   // DIM increments; empty = consecutive values

  void validate(const PricingModel& model) const;
  FeatureVector explicand_at(double v) const;

  static AuditGrid linspace(const PricingModel& model, std::size_t feature_index,
                            double lo, double hi, std::size_t count,
                            FeatureVector context, FeatureVector baseline);
};

struct Witness {
  std::vector<FeatureVector> points;
  std::vector<double> attributions;
  double margin = 0.0;  // amount by which the inequality is broken
  std::string note;
};

struct AxiomReport {
  Axiom axiom = Axiom::aim;
  Method method = Method::bshap;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  double tolerance_used = 0.0;
  std::string detail;
};

/// Checks run on finite grids: "pass" means no violation was found on the
/// grid at the stated tolerance, nothing stronger. Violations must exceed
/// max(1e-8, 1e-6 * attribution scale) unless an explicit tolerance is
/// given, so quadrature noise cannot manufacture counterexamples.
struct AuditOptions {
  std::optional<double> tolerance;
};

double default_audit_tolerance(double attribution_scale);

/// Average individual monotonicity: a monotone feature's attribution
/// carries the sign of direction * (explicand - baseline).
AxiomReport check_aim(const AttributionEngine& engine, const PricingModel& model,
                      const std::vector<AuditGrid>& grids, const AuditOptions& opts = {});

/// Demand individual monotonicity: raising the explicand coordinate of an
/// increasing feature must not lower its attribution (decreasing features
/// use the mirrored inequality).
AxiomReport check_dim(const AttributionEngine& engine, const PricingModel& model,
                      const AuditGrid& grid, const AuditOptions& opts = {});

enum class MarginalKind { dme, rdme, ime };

/// Normalized-attribution monotonicity for curvature-flagged features:
/// A/(x - x') nonincreasing for DME, nondecreasing for RDME and IME.
/// Grid values must sit strictly above the baseline coordinate.
AxiomReport check_marginal(const AttributionEngine& engine, const PricingModel& model,
                           const AuditGrid& grid, MarginalKind kind,
                           const AuditOptions& opts = {});

/// Alignment between two models sharing the tested feature and a block of
/// common features. g's explicand/baseline are g_context/g_baseline with
/// the alpha and shared coordinates copied over from f's.
struct SharedFeatureMap {
  std::size_t alpha_f = 0;
  std::size_t alpha_g = 0;
  std::vector<std::pair<std::size_t, std::size_t>> shared;  // (f index, g index)
  FeatureVector g_context;
  FeatureVector g_baseline;
};

/// First-order monotonic dominance: when df/dalpha >= dg/dalpha on the
/// grid (spot-verified by derivative sampling), f's alpha attribution
/// must dominate g's at matched points.
AxiomReport check_fmd(const AttributionEngine& engine, const PricingModel& model_f,
                      const PricingModel& model_g, const SharedFeatureMap& map,
                      const AuditGrid& grid, const AuditOptions& opts = {});

/// Generalized dummy: a feature the model ignores (verified by sampling)
/// gets zero attribution, and removing it (pinned at its baseline
/// coordinate) leaves every other attribution unchanged.
AxiomReport check_generalized_dummy(const AttributionEngine& engine,
                                    const PricingModel& model, std::size_t dummy_index,
                                    const AuditGrid& grid, const AuditOptions& opts = {});

/// Convex geometry: every point the attribution actually evaluated must
/// lie inside the training domain. Throws contract_violation when the
/// explicand or baseline is outside (the axiom presumes both inside).
AxiomReport check_cg(const AttributionResult& result, const TrainingDomain& domain);

}  // namespace riskattr
