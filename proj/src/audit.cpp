// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/audit.hpp"

#include <algorithm>
#include <cmath>

#include "riskattr/errors.hpp"

namespace riskattr {

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::aim: return "aim";
    case Axiom::dim: return "dim";
    case Axiom::dme: return "dme";
    case Axiom::rdme: return "rdme";
    case Axiom::ime: return "ime";
    case Axiom::fmd: return "fmd";
    case Axiom::gd: return "gd";
    default: return "cg";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::violated: return "violated";
    default: return "not-applicable";
  }
}

Axiom axiom_from_string(const std::string& s) {
  if (s == "aim") return Axiom::aim;
  if (s == "dim") return Axiom::dim;
  if (s == "dme") return Axiom::dme;
  if (s == "rdme") return Axiom::rdme;
  if (s == "ime") return Axiom::ime;
  if (s == "fmd") return Axiom::fmd;
  if (s == "gd") return Axiom::gd;
  if (s == "cg") return Axiom::cg;
  throw contract_violation("unknown axiom '" + s + "'");
}

double default_audit_tolerance(double attribution_scale) {
  return std::max(1e-8, 1e-6 * attribution_scale);
}

// ---------------------------------------------------------------------------

void AuditGrid::validate(const PricingModel& model) const {
  model.require_compatible(context);
  model.require_compatible(baseline);
  if (feature_index >= model.n_features())
    throw contract_violation("AuditGrid: feature index out of range");
  if (values.empty()) throw contract_violation("AuditGrid: empty value grid");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) throw contract_violation("AuditGrid: non-finite value");
    if (k > 0 && values[k] < values[k - 1])
      throw contract_violation("AuditGrid: values must be ascending");
  }
  for (double c : deltas)
    if (!(c > 0.0) || !std::isfinite(c))
      throw contract_violation("AuditGrid: deltas must be positive");
}

FeatureVector AuditGrid::explicand_at(double v) const {
  return context.with_value(feature_index, v);
}

AuditGrid AuditGrid::linspace(const PricingModel& model, std::size_t feature_index,
                              double lo, double hi, std::size_t count,
                              FeatureVector context, FeatureVector baseline) {
  if (count < 2 || hi <= lo) throw contract_violation("AuditGrid: bad linspace");
  AuditGrid g{feature_index, {}, std::move(context), std::move(baseline), {}};
  g.values.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    g.values.push_back(lo + (hi - lo) * static_cast<double>(k) /
                                static_cast<double>(count - 1));
  g.validate(model);
  return g;
}

namespace {

std::shared_ptr<const PricingModel> non_owning(const PricingModel& m) {
  return std::shared_ptr<const PricingModel>(&m, [](const PricingModel*) {});
}

struct GridRun {
  std::vector<AttributionResult> results;  // one per grid value
  double scale = 0.0;                      // max |A_alpha|
  double df_scale = 1.0;                   // max(1, |f(expl)-f(base)|) over grid
};

GridRun run_grid(const AttributionEngine& engine, const PricingModel& model,
                 const AuditGrid& grid) {
  GridRun run;
  run.results.reserve(grid.values.size());
  for (double v : grid.values) {
    AttributionResult res = engine.run(model, grid.explicand_at(v), grid.baseline);
    run.scale = std::max(run.scale, std::fabs(res.attributions[grid.feature_index]));
    const double df = res.sum() - res.completeness_residual;  // f(expl) - f(base)
    run.df_scale = std::max(run.df_scale, std::fabs(df));
    run.results.push_back(std::move(res));
  }
  return run;
}

double resolve_tolerance(const AuditOptions& opts, const GridRun& run) {
  if (opts.tolerance) return *opts.tolerance;
  return std::max(default_audit_tolerance(run.scale), 1e-8 * run.df_scale);
}

std::string grid_note(const AuditGrid& grid, const PricingModel& model) {
  return "feature " + model.names()[grid.feature_index] + ", " +
         std::to_string(grid.values.size()) + " grid values in [" +
         std::to_string(grid.values.front()) + ", " + std::to_string(grid.values.back()) + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

AxiomReport check_aim(const AttributionEngine& engine, const PricingModel& model,
                      const std::vector<AuditGrid>& grids, const AuditOptions& opts) {
  AxiomReport report;
  report.axiom = Axiom::aim;
  report.method = engine.method;

  bool any_applicable = false;
  for (const AuditGrid& grid : grids) {
    grid.validate(model);
    const int direction = model.shape().direction(grid.feature_index);
    if (direction == 0) continue;
    any_applicable = true;

    const GridRun run = run_grid(engine, model, grid);
    const double tol = resolve_tolerance(opts, run);
    report.tolerance_used = std::max(report.tolerance_used, tol);

    for (std::size_t k = 0; k < grid.values.size(); ++k) {
      const double v = grid.values[k];
      const double a = run.results[k].attributions[grid.feature_index];
      const double dv = v - grid.baseline.value(grid.feature_index);
      // required attribution sign: direction * sign(explicand - baseline)
      const double required = direction * (dv > 0.0 ? 1.0 : (dv < 0.0 ? -1.0 : 0.0));
      if (required * a < -tol) {
        Witness w;
        w.points = {grid.explicand_at(v), grid.baseline};
        w.attributions = {a};
        w.margin = -required * a;
        w.note = "attribution has the wrong sign for a monotone feature";
        report.witnesses.push_back(std::move(w));
      }
    }
    if (report.detail.empty()) report.detail = grid_note(grid, model);
  }

  if (!any_applicable) {
    report.verdict = Verdict::not_applicable;
    report.detail = "no audited feature is declared monotone";
    return report;
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

AxiomReport check_dim(const AttributionEngine& engine, const PricingModel& model,
                      const AuditGrid& grid, const AuditOptions& opts) {
  grid.validate(model);
  AxiomReport report;
  report.axiom = Axiom::dim;
  report.method = engine.method;
  report.detail = grid_note(grid, model);

  const int direction = model.shape().direction(grid.feature_index);
  if (direction == 0) {
    report.verdict = Verdict::not_applicable;
    report.detail = "feature not declared monotone";
    return report;
  }

  // (v, v+c) explicand pairs; with no deltas given use consecutive values
  std::vector<std::pair<double, double>> pairs;
  if (grid.deltas.empty()) {
    for (std::size_t k = 0; k + 1 < grid.values.size(); ++k)
      if (grid.values[k + 1] > grid.values[k])
        pairs.emplace_back(grid.values[k], grid.values[k + 1]);
  } else {
    for (double c : grid.deltas)
      for (double v : grid.values) pairs.emplace_back(v, v + c);
  }
  if (pairs.empty()) throw contract_violation("check_dim: no explicand pairs to compare");

  GridRun run;  // evaluate each distinct coordinate once
  std::vector<double> coords;
  for (auto& [lo, hi] : pairs) {
    coords.push_back(lo);
    coords.push_back(hi);
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  auto attribution_at = [&](double v) -> const AttributionResult& {
    const std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), v) - coords.begin());
    return run.results[idx];
  };
  for (double v : coords) {
    AttributionResult res = engine.run(model, grid.explicand_at(v), grid.baseline);
    run.scale = std::max(run.scale, std::fabs(res.attributions[grid.feature_index]));
    const double df = res.sum() - res.completeness_residual;
    run.df_scale = std::max(run.df_scale, std::fabs(df));
    run.results.push_back(std::move(res));
  }
  const double tol = resolve_tolerance(opts, run);
  report.tolerance_used = tol;

  for (auto& [lo, hi] : pairs) {
    const double a_lo = attribution_at(lo).attributions[grid.feature_index];
    const double a_hi = attribution_at(hi).attributions[grid.feature_index];
    // increasing features require nondecrease, decreasing ones nonincrease
    const double breach = direction > 0 ? a_lo - a_hi : a_hi - a_lo;
    if (breach > tol) {
      Witness w;
      w.points = {grid.explicand_at(lo), grid.explicand_at(hi)};
      w.attributions = {a_lo, a_hi};
      w.margin = breach;
      w.note = direction > 0 ? "attribution fell as the feature rose"
                             : "attribution rose as the feature rose";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

AxiomReport check_marginal(const AttributionEngine& engine, const PricingModel& model,
                           const AuditGrid& grid, MarginalKind kind,
                           const AuditOptions& opts) {
  grid.validate(model);
  AxiomReport report;
  report.axiom = kind == MarginalKind::dme    ? Axiom::dme
                 : kind == MarginalKind::rdme ? Axiom::rdme
                                              : Axiom::ime;
  report.method = engine.method;
  report.detail = grid_note(grid, model);

  const Curvature want = kind == MarginalKind::dme    ? Curvature::dme
                         : kind == MarginalKind::rdme ? Curvature::rdme
                                                      : Curvature::ime;
  if (model.shape().curvature_of(grid.feature_index) != want) {
    report.verdict = Verdict::not_applicable;
    report.detail = "feature lacks the " + to_string(want) + " curvature flag";
    return report;
  }

  const double base_coord = grid.baseline.value(grid.feature_index);
  for (double v : grid.values)
    if (v <= base_coord + 1e-9)
      throw contract_violation("check_marginal: grid values must sit strictly above the "
                               "baseline coordinate (min gap 1e-9)");

  const GridRun run = run_grid(engine, model, grid);
  const double tol = resolve_tolerance(opts, run);
  report.tolerance_used = tol;

  std::vector<double> ratio(grid.values.size());
  for (std::size_t k = 0; k < grid.values.size(); ++k)
    ratio[k] = run.results[k].attributions[grid.feature_index] /
               (grid.values[k] - base_coord);

  for (std::size_t k = 0; k + 1 < grid.values.size(); ++k) {
    // DME wants the normalized attribution nonincreasing; RDME and IME
    // want it nondecreasing.
    const double breach =
        kind == MarginalKind::dme ? ratio[k + 1] - ratio[k] : ratio[k] - ratio[k + 1];
    if (breach > tol) {
      Witness w;
      w.points = {grid.explicand_at(grid.values[k]), grid.explicand_at(grid.values[k + 1])};
      w.attributions = {ratio[k], ratio[k + 1]};
      w.margin = breach;
      w.note = "normalized attribution A/(x - x') broke monotonicity";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

AxiomReport check_fmd(const AttributionEngine& engine, const PricingModel& model_f,
                      const PricingModel& model_g, const SharedFeatureMap& map,
                      const AuditGrid& grid, const AuditOptions& opts) {
  grid.validate(model_f);
  model_g.require_compatible(map.g_context);
  model_g.require_compatible(map.g_baseline);
  if (map.alpha_f != grid.feature_index)
    throw contract_violation("check_fmd: grid feature differs from the map's alpha");
  if (map.alpha_g >= model_g.n_features())
    throw contract_violation("check_fmd: alpha_g out of range");
  for (auto& [fi, gi] : map.shared)
    if (fi >= model_f.n_features() || gi >= model_g.n_features())
      throw contract_violation("check_fmd: shared feature index out of range");

  AxiomReport report;
  report.axiom = Axiom::fmd;
  report.method = engine.method;
  report.detail = grid_note(grid, model_f);

  auto transfer = [&](const FeatureVector& from_f, const FeatureVector& g_template) {
    FeatureVector y = g_template;
    for (auto& [fi, gi] : map.shared) y = y.with_value(gi, from_f.value(fi));
    return y.with_value(map.alpha_g, from_f.value(map.alpha_f));
  };
  const FeatureVector y_baseline = transfer(grid.baseline, map.g_baseline);

  // spot-verify the dominance precondition by derivative sampling
  const FiniteDifferenceModel fd_f(non_owning(model_f));
  const FiniteDifferenceModel fd_g(non_owning(model_g));
  const PricingModel& df = model_f.has_gradient() ? model_f : fd_f;
  const PricingModel& dg = model_g.has_gradient() ? model_g : fd_g;
  for (double v : grid.values) {
    const FeatureVector xf = grid.explicand_at(v);
    const FeatureVector yg = transfer(xf, map.g_context);
    const double dfa = df.gradient(xf)[map.alpha_f];
    const double dga = dg.gradient(yg)[map.alpha_g];
    const double dom_tol = std::max(1e-8, 1e-6 * std::max(std::fabs(dfa), std::fabs(dga)));
    if (dfa < dga - dom_tol) {
      report.verdict = Verdict::not_applicable;
      report.detail = "dominance precondition failed at sampled point: df/dalpha = " +
                      std::to_string(dfa) + " < dg/dalpha = " + std::to_string(dga);
      Witness w;
      w.points = {xf, yg};
      w.attributions = {dfa, dga};
      w.margin = dga - dfa;
      w.note = "sampled derivative ordering";
      report.witnesses.push_back(std::move(w));
      return report;
    }
  }

  GridRun run;
  std::vector<std::pair<double, double>> pairs;  // (A_f, A_g) per grid value
  double scale = 0.0, df_scale = 1.0;
  std::vector<FeatureVector> f_points, g_points;
  for (double v : grid.values) {
    const FeatureVector xf = grid.explicand_at(v);
    const FeatureVector yg = transfer(xf, map.g_context);
    const AttributionResult rf = engine.run(model_f, xf, grid.baseline);
    const AttributionResult rg = engine.run(model_g, yg, y_baseline);
    const double af = rf.attributions[map.alpha_f];
    const double ag = rg.attributions[map.alpha_g];
    scale = std::max({scale, std::fabs(af), std::fabs(ag)});
    df_scale = std::max({df_scale, std::fabs(rf.sum() - rf.completeness_residual),
                         std::fabs(rg.sum() - rg.completeness_residual)});
    pairs.emplace_back(af, ag);
    f_points.push_back(xf);
    g_points.push_back(yg);
  }
  run.scale = scale;
  run.df_scale = df_scale;
  const double tol = resolve_tolerance(opts, run);
  report.tolerance_used = tol;

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [af, ag] = pairs[k];
    if (af < ag - tol) {
      Witness w;
      w.points = {f_points[k], g_points[k]};
      w.attributions = {af, ag};
      w.margin = ag - af;
      w.note = "dominating model received the smaller attribution";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

AxiomReport check_generalized_dummy(const AttributionEngine& engine,
                                    const PricingModel& model, std::size_t dummy_index,
                                    const AuditGrid& grid, const AuditOptions& opts) {
  grid.validate(model);
  if (dummy_index >= model.n_features())
    throw contract_violation("check_generalized_dummy: dummy index out of range");

  AxiomReport report;
  report.axiom = Axiom::gd;
  report.method = engine.method;
  report.detail = grid_note(grid, model) + "; dummy = " + model.names()[dummy_index];

  // sample constancy in the dummy coordinate
  const double d_base = grid.baseline.value(dummy_index);
  const double d_ctx = grid.context.value(dummy_index);
  const double spread = std::max(1.0, std::max(std::fabs(d_base), std::fabs(d_ctx)));
  const std::vector<double> probes = {d_base, d_ctx, d_base + spread, d_base - spread,
                                      0.5 * (d_base + d_ctx) + 0.25 * spread};
  std::vector<FeatureVector> anchors = {grid.baseline, grid.explicand_at(grid.values.front()),
                                        grid.explicand_at(grid.values.back())};
  for (const FeatureVector& anchor : anchors) {
    // a probe the model rejects (outside its domain) also leaves the
    // precondition unverified
    try {
      const double ref = model.evaluate(anchor.with_value(dummy_index, probes[0]));
      for (double p : probes) {
        const double val = model.evaluate(anchor.with_value(dummy_index, p));
        if (std::fabs(val - ref) > 1e-9 * std::max(1.0, std::fabs(ref))) {
          report.verdict = Verdict::not_applicable;
          report.detail = "model is not constant in the sampled dummy coordinate: f moved by " +
                          std::to_string(val - ref);
          Witness w;
          w.points = {anchor.with_value(dummy_index, probes[0]),
                      anchor.with_value(dummy_index, p)};
          w.attributions = {ref, val};
          w.margin = std::fabs(val - ref);
          w.note = "sampled non-constancy";
          report.witnesses.push_back(std::move(w));
          return report;
        }
      }
    } catch (const std::exception& e) {
      report.verdict = Verdict::not_applicable;
      report.detail = std::string("constancy sampling failed: ") + e.what();
      Witness w;
      w.points = {anchor};
      w.margin = 1.0;
      w.note = "probe evaluation threw";
      report.witnesses.push_back(std::move(w));
      return report;
    }
  }

  // reduction with the dummy pinned at its baseline coordinate
  const SliceModel reduced(non_owning(model), {{dummy_index, d_base}});
  auto drop = [&](const FeatureVector& x) {
    std::vector<double> vals;
    vals.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != dummy_index) vals.push_back(x.value(i));
    return FeatureVector(FeatureVector::make_names(reduced.names()), std::move(vals));
  };
  const FeatureVector red_baseline = drop(grid.baseline);

  GridRun run;
  std::vector<std::pair<AttributionResult, AttributionResult>> runs;
  for (double v : grid.values) {
    const FeatureVector x = grid.explicand_at(v);
    AttributionResult full = engine.run(model, x, grid.baseline);
    AttributionResult red = engine.run(reduced, drop(x), red_baseline);
    for (double a : full.attributions) run.scale = std::max(run.scale, std::fabs(a));
    run.df_scale = std::max(run.df_scale, std::fabs(full.sum() - full.completeness_residual));
    runs.emplace_back(std::move(full), std::move(red));
  }
  const double tol = resolve_tolerance(opts, run);
  report.tolerance_used = tol;

  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    const auto& [full, red] = runs[k];
    const double a_dummy = full.attributions[dummy_index];
    if (std::fabs(a_dummy) > tol) {
      Witness w;
      w.points = {full.explicand, full.baseline};
      w.attributions = {a_dummy};
      w.margin = std::fabs(a_dummy);
      w.note = "dummy feature received a nonzero attribution";
      report.witnesses.push_back(std::move(w));
    }
    for (std::size_t j = 0, rj = 0; j < full.attributions.size(); ++j) {
      if (j == dummy_index) continue;
      const double diff = std::fabs(full.attributions[j] - red.attributions[rj]);
      if (diff > tol) {
        Witness w;
        w.points = {full.explicand, red.explicand};
        w.attributions = {full.attributions[j], red.attributions[rj]};
        w.margin = diff;
        w.note = "attribution of '" + model.names()[j] + "' changed when the dummy was removed";
        report.witnesses.push_back(std::move(w));
      }
      ++rj;
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

namespace {

// rough Euclidean measure of how far outside the domain a point sits,
// used only to give violation witnesses a positive margin
double outside_margin(const TrainingDomain& domain, const FeatureVector& x) {
  double margin = 0.0;
  const auto& lo = domain.box_lo();
  const auto& hi = domain.box_hi();
  if (!lo.empty())
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (domain.mode() == DomainMode::hull2d &&
          (i == domain.hull_features().first || i == domain.hull_features().second))
        continue;
      margin = std::max({margin, lo[i] - x.value(i), x.value(i) - hi[i]});
    }
  if (domain.mode() == DomainMode::hull2d && domain.hull().size() >= 3) {
    const auto [fa, fb] = domain.hull_features();
    const double px = x.value(fa), py = x.value(fb);
    const auto& hull = domain.hull();
    double worst = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      const double ex = b[0] - a[0], ey = b[1] - a[1];
      const double len = std::hypot(ex, ey);
      if (len <= 0.0) continue;
      const double signed_in = (ex * (py - a[1]) - ey * (px - a[0])) / len;
      worst = std::max(worst, -signed_in);
    }
    margin = std::max(margin, worst);
  }
  return margin > 0.0 ? margin : 1e-12;
}

}  // namespace

AxiomReport check_cg(const AttributionResult& result, const TrainingDomain& domain) {
  if (!domain.contains(result.explicand) || !domain.contains(result.baseline))
    throw contract_violation("check_cg: explicand and baseline must lie inside the domain");

  AxiomReport report;
  report.axiom = Axiom::cg;
  report.method = result.method;
  report.tolerance_used = 0.0;
  report.detail = std::to_string(result.evaluation_points.size()) + " evaluation points, " +
                  to_string(domain.mode()) + " domain";
  if (domain.mode() == DomainMode::point_cloud) report.detail += " (extended-CG)";

  for (const FeatureVector& p : result.evaluation_points) {
    if (!domain.contains(p)) {
      Witness w;
      w.points = {p};
      w.margin = outside_margin(domain, p);
      w.note = "model evaluated outside the training domain";
      report.witnesses.push_back(std::move(w));
    }
  }
  report.verdict = report.witnesses.empty() ? Verdict::pass : Verdict::violated;
  return report;
}

}  // namespace riskattr
