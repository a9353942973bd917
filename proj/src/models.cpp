// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/models.hpp"

#include <cmath>

#include "riskattr/errors.hpp"

namespace riskattr {

namespace {

constexpr double kTinyTimeOrVol = 1e-12;
const double kInvSqrt2 = 0.7071067811865475244;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw contract_violation(std::string(what) + " must be finite");
}

struct BsmTerms {
  double d1, d2, sqrt_tau, disc;  // disc = e^{-r tau}
};

BsmTerms bsm_terms(double S, double K, double r, double tau, double sigma) {
  BsmTerms t;
  t.sqrt_tau = std::sqrt(tau);
  const double vol = sigma * t.sqrt_tau;
  t.d1 = (std::log(S / K) + (r + 0.5 * sigma * sigma) * tau) / vol;
  t.d2 = t.d1 - vol;
  t.disc = std::exp(-r * tau);
  return t;
}

void check_bsm_domain(double S, double K, double r, double tau, double sigma) {
  require_finite(S, "S");
  require_finite(K, "K");
  require_finite(r, "r");
  require_finite(tau, "tau");
  require_finite(sigma, "sigma");
  if (S <= 0.0 || K <= 0.0) throw contract_violation("bsm: S and K must be positive");
  if (tau < 0.0 || sigma < 0.0) throw contract_violation("bsm: tau and sigma must be >= 0");
}

}  // namespace

std::string to_string(OptionKind k) { return k == OptionKind::call ? "call" : "put"; }

OptionKind option_kind_from_string(const std::string& s) {
  if (s == "call") return OptionKind::call;
  if (s == "put") return OptionKind::put;
  throw contract_violation("unknown option kind '" + s + "'");
}

double norm_cdf(double x) {
  require_finite(x, "x");
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

double norm_pdf(double x) {
  return 0.3989422804014326779 * std::exp(-0.5 * x * x);
}

double bond_price(double r, double c, double T) {
  require_finite(r, "r");
  require_finite(c, "c");
  require_finite(T, "T");
  if (T <= 0.0) throw contract_violation("bond_price: T must be positive");
  if (c < 0.0) throw contract_violation("bond_price: principal must be >= 0");
  return c * std::exp(-r * T);
}

double bsm_price(double S, double K, double r, double tau, double sigma, OptionKind kind) {
  check_bsm_domain(S, K, r, tau, sigma);
  if (tau < kTinyTimeOrVol)
    return kind == OptionKind::call ? std::max(S - K, 0.0) : std::max(K - S, 0.0);
  if (sigma < kTinyTimeOrVol) {
    const double fwd = S - K * std::exp(-r * tau);
    return kind == OptionKind::call ? std::max(fwd, 0.0) : std::max(-fwd, 0.0);
  }
  const BsmTerms t = bsm_terms(S, K, r, tau, sigma);
  if (kind == OptionKind::call)
    return S * norm_cdf(t.d1) - K * t.disc * norm_cdf(t.d2);
  return K * t.disc * norm_cdf(-t.d2) - S * norm_cdf(-t.d1);
}

Greeks bsm_greeks(double S, double K, double r, double tau, double sigma, OptionKind kind) {
  check_bsm_domain(S, K, r, tau, sigma);
  if (tau < kTinyTimeOrVol || sigma < kTinyTimeOrVol)
    throw contract_violation("bsm_greeks: degenerate tau/sigma, greeks undefined");
  const BsmTerms t = bsm_terms(S, K, r, tau, sigma);
  const double phi = norm_pdf(t.d1);

  Greeks g;
  g.vega = S * phi * t.sqrt_tau;
  g.gamma = phi / (S * sigma * t.sqrt_tau);
  g.vomma = g.vega * t.d1 * t.d2 / sigma;
  if (kind == OptionKind::call) {
    g.delta = norm_cdf(t.d1);
    g.rho = K * tau * t.disc * norm_cdf(t.d2);
  } else {
    g.delta = norm_cdf(t.d1) - 1.0;
    g.rho = -K * tau * t.disc * norm_cdf(-t.d2);
  }
  return g;
}

// ---------------------------------------------------------------------------

BondModel::BondModel(double maturity_years) : maturity_(maturity_years) {
  require_finite(maturity_years, "T");
  if (maturity_years <= 0.0) throw contract_violation("BondModel: maturity must be positive");
  names_ = FeatureVector::make_names({"r", "c"});
  shape_.monotone_decreasing.insert(0);
  shape_.monotone_increasing.insert(1);
  shape_.curvature = {Curvature::rdme, Curvature::none};
}

double BondModel::evaluate(const FeatureVector& x) const {
  require_compatible(x);
  return bond_price(x.value(0), x.value(1), maturity_);
}

std::vector<double> BondModel::gradient(const FeatureVector& x) const {
  require_compatible(x);
  const double r = x.value(0), c = x.value(1);
  const double df = std::exp(-r * maturity_);
  return {-c * maturity_ * df, df};
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& BsmModel::feature_names() {
  static const std::vector<std::string> names = {"S", "r", "tau", "K", "sigma"};
  return names;
}

BsmModel::BsmModel(OptionKind kind) : kind_(kind) {
  names_ = FeatureVector::make_names(feature_names());
  shape_.curvature.assign(5, Curvature::none);
  if (kind_ == OptionKind::call) {
    shape_.monotone_increasing = {0, 1, 4};  // S, r, sigma
    shape_.monotone_decreasing = {3};        // K
    shape_.curvature[0] = Curvature::ime;    // Gamma > 0
  } else {
    shape_.monotone_decreasing = {0, 1};     // S, r
    shape_.monotone_increasing = {3, 4};     // K, sigma
    shape_.curvature[0] = Curvature::rdme;   // Gamma > 0, Delta < 0
  }
}

double BsmModel::evaluate(const FeatureVector& x) const {
  require_compatible(x);
  return bsm_price(x.value(0), x.value(3), x.value(1), x.value(2), x.value(4), kind_);
}

std::vector<double> BsmModel::gradient(const FeatureVector& x) const {
  require_compatible(x);
  const double S = x.value(0), r = x.value(1), tau = x.value(2);
  const double K = x.value(3), sigma = x.value(4);
  check_bsm_domain(S, K, r, tau, sigma);
  if (tau < kTinyTimeOrVol || sigma < kTinyTimeOrVol)
    throw contract_violation("BsmModel::gradient: degenerate tau/sigma");

  const BsmTerms t = bsm_terms(S, K, r, tau, sigma);
  const double phi = norm_pdf(t.d1);
  const double vega = S * phi * t.sqrt_tau;
  const double theta_core = S * phi * sigma / (2.0 * t.sqrt_tau);

  std::vector<double> g(5);
  if (kind_ == OptionKind::call) {
    const double n2 = norm_cdf(t.d2);
    g[0] = norm_cdf(t.d1);                    // dC/dS
    g[1] = K * tau * t.disc * n2;             // dC/dr
    g[2] = theta_core + r * K * t.disc * n2;  // dC/dtau
    g[3] = -t.disc * n2;                      // dC/dK
    g[4] = vega;                              // dC/dsigma
  } else {
    const double n2m = norm_cdf(-t.d2);
    g[0] = norm_cdf(t.d1) - 1.0;
    g[1] = -K * tau * t.disc * n2m;
    g[2] = theta_core - r * K * t.disc * n2m;
    g[3] = t.disc * n2m;
    g[4] = vega;
  }
  return g;
}

}  // namespace riskattr
