// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/attribution.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "riskattr/coalition.hpp"
#include "riskattr/errors.hpp"

namespace riskattr {

std::string to_string(Method m) { return m == Method::bshap ? "bshap" : "ig"; }

Method method_from_string(const std::string& s) {
  if (s == "bshap") return Method::bshap;
  if (s == "ig") return Method::ig;
  throw contract_violation("unknown attribution method '" + s + "'");
}

double AttributionResult::sum() const {
  double total = 0.0;
  for (double a : attributions) total += a;
  return total;
}

namespace {

void check_inputs(const PricingModel& model, const FeatureVector& explicand,
                  const FeatureVector& baseline) {
  model.require_compatible(explicand);
  model.require_compatible(baseline);
  if (!explicand.same_names(baseline))
    throw contract_violation("explicand and baseline carry different feature names");
}

}  // namespace

AttributionResult bshap(const PricingModel& model, const FeatureVector& explicand,
                        const FeatureVector& baseline) {
  check_inputs(model, explicand, baseline);
  const std::size_t n = explicand.size();
  if (n > kMaxCoalitionPlayers)
    throw size_limit_error("bshap: " + std::to_string(n) + " features exceed the exact "
                           "enumeration cap of " + std::to_string(kMaxCoalitionPlayers));

  const std::size_t n_masks = std::size_t{1} << n;
  AttributionResult result;
  result.method = Method::bshap;
  result.explicand = explicand;
  result.baseline = baseline;
  result.evaluation_points.reserve(n_masks);

  // One model evaluation per coalition, memoized by bitmask.
  std::vector<double> v(n_masks);
  for (std::size_t mask = 0; mask < n_masks; ++mask) {
    FeatureVector point =
        coalition_substitute(explicand, baseline, Coalition(static_cast<std::uint32_t>(mask)));
    try {
      v[mask] = model.evaluate(point);
    } catch (const std::exception& e) {
      std::string coords = "(";
      for (std::size_t i = 0; i < n; ++i)
        coords += (i ? "," : "") + std::to_string(point.value(i));
      coords += ")";
      throw contract_violation("bshap: model evaluation failed at corner " + coords +
                               ": " + e.what());
    }
    result.evaluation_points.push_back(std::move(point));
  }
  result.n_model_evals = n_masks;

  std::vector<double> weight_by_size(n);
  for (std::size_t k = 0; k < n; ++k) weight_by_size[k] = shapley_weight(k, n);

  result.attributions.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    long double acc = 0.0L;
    for (std::size_t mask = 0; mask < n_masks; ++mask) {
      if (mask & bit) continue;
      const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
      acc += static_cast<long double>(weight_by_size[k]) *
             static_cast<long double>(v[mask | bit] - v[mask]);
    }
    result.attributions[i] = static_cast<double>(acc);
  }

  result.completeness_residual =
      result.sum() - (v[n_masks - 1] - v[0]);
  return result;
}

namespace {

AttributionResult ig_once(const PricingModel& model, const FeatureVector& explicand,
                          const FeatureVector& baseline, QuadratureRule rule, int points) {
  const std::size_t n = explicand.size();
  const QuadratureNodes nodes = quadrature_nodes(rule, points);

  AttributionResult result;
  result.method = Method::ig;
  result.explicand = explicand;
  result.baseline = baseline;
  result.evaluation_points.reserve(nodes.t.size());

  std::vector<double> displacement(n);
  for (std::size_t i = 0; i < n; ++i)
    displacement[i] = explicand.value(i) - baseline.value(i);

  std::vector<long double> integral(n, 0.0L);
  for (std::size_t k = 0; k < nodes.t.size(); ++k) {
    std::vector<double> coords(n);
    for (std::size_t i = 0; i < n; ++i)
      coords[i] = baseline.value(i) + nodes.t[k] * displacement[i];
    FeatureVector point(explicand.names_handle(), std::move(coords));
    const std::vector<double> grad = model.gradient(point);
    for (std::size_t i = 0; i < n; ++i)
      integral[i] += static_cast<long double>(nodes.w[k]) * static_cast<long double>(grad[i]);
    result.evaluation_points.push_back(std::move(point));
  }
  result.n_model_evals = nodes.t.size();

  result.attributions.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    result.attributions[i] = displacement[i] * static_cast<double>(integral[i]);

  result.completeness_residual =
      result.sum() - (model.evaluate(explicand) - model.evaluate(baseline));
  return result;
}

}  // namespace

AttributionResult integrated_gradients(const PricingModel& model,
                                       const FeatureVector& explicand,
                                       const FeatureVector& baseline,
                                       const QuadratureConfig& config) {
  check_inputs(model, explicand, baseline);
  if (!model.has_gradient())
    throw capability_error("integrated_gradients: the model has no gradient; wrap it in "
                           "FiniteDifferenceModel to use central differences");
  if (config.points < 2)
    throw contract_violation("integrated_gradients: quadrature needs >= 2 points");

  AttributionResult result = ig_once(model, explicand, baseline, config.rule, config.points);
  if (config.refine_check) {
    const AttributionResult fine =
        ig_once(model, explicand, baseline, config.rule, 2 * config.points);
    double delta = 0.0;
    for (std::size_t i = 0; i < result.attributions.size(); ++i)
      delta = std::max(delta, std::fabs(result.attributions[i] - fine.attributions[i]));
    result.refinement_delta = delta;
  }
  return result;
}

double ig_bond_closed_form(double r, double c, double T) {
  if (!std::isfinite(r) || !std::isfinite(c) || !std::isfinite(T))
    throw contract_violation("ig_bond_closed_form: inputs must be finite");
  const double a = r * T;
  if (a < 0.0)
    throw contract_violation("ig_bond_closed_form: r*T must be nonnegative");
  if (a <= 1e-8) return -c * a / 2.0;
  // c (e^{-a} + e^{-a}/a - 1/a) = c (e^{-a} + expm1(-a)/a), stable for small a.
  return c * (std::exp(-a) + std::expm1(-a) / a);
}

AttributionResult AttributionEngine::run(const PricingModel& model,
                                         const FeatureVector& explicand,
                                         const FeatureVector& baseline) const {
  if (method == Method::bshap) return bshap(model, explicand, baseline);
  if (model.has_gradient()) return integrated_gradients(model, explicand, baseline, quad);
  struct NonOwning : PricingModel {
    // thin view so the engine can wrap stack-allocated models
    const PricingModel* m;
    explicit NonOwning(const PricingModel* m) : m(m) {}
    std::size_t n_features() const override { return m->n_features(); }
    const std::vector<std::string>& names() const override { return m->names(); }
    double evaluate(const FeatureVector& x) const override { return m->evaluate(x); }
    const ShapeProfile& shape() const override { return m->shape(); }
  };
  FiniteDifferenceModel fd(std::make_shared<NonOwning>(&model));
  return integrated_gradients(fd, explicand, baseline, quad);
}

}  // namespace riskattr
