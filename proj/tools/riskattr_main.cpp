// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riskattr/attribution.hpp"
#include "riskattr/audit.hpp"
#include "riskattr/domain.hpp"
#include "riskattr/errors.hpp"
#include "riskattr/io.hpp"
#include "riskattr/models.hpp"
#include "riskattr/train.hpp"
#include "riskattr/vix.hpp"

namespace {

using namespace riskattr;

std::vector<double> parse_numbers(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      out.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw contract_violation("cannot parse '" + field + "' as a number");
    }
  }
  if (out.empty()) throw contract_violation("empty vector '" + csv + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

struct ModelChoice {
  std::string source = "bsm-call";  // bond | bsm-call | bsm-put | surrogate-file
  std::string file;
  double bond_maturity = 10.0;

  std::shared_ptr<const PricingModel> build() const {
    if (source == "bond") return std::make_shared<BondModel>(bond_maturity);
    if (source == "bsm-call") return std::make_shared<BsmModel>(OptionKind::call);
    if (source == "bsm-put") return std::make_shared<BsmModel>(OptionKind::put);
    if (source == "surrogate-file") {
      if (file.empty())
        throw contract_violation("--model-file is required with --model surrogate-file");
      return MlpSurrogate::from_json_string(read_text_file(file));
    }
    throw contract_violation("unknown model '" + source + "'");
  }
};

/// Rates in CLI vectors follow the source material: percent figures like
/// 4.26 next to decimal ones like 0.05. "auto" treats any rate above 1 as
/// a percentage.
double normalize_rate(double r, const std::string& unit) {
  if (unit == "percent") return r / 100.0;
  if (unit == "decimal") return r;
  if (unit == "auto") return r > 1.0 ? r / 100.0 : r;
  throw contract_violation("--rates must be auto, percent or decimal");
}

FeatureVector make_point(const PricingModel& model, const std::string& csv,
                         const std::string& rate_unit) {
  std::vector<double> vals = parse_numbers(csv);
  if (vals.size() != model.n_features())
    throw contract_violation("expected " + std::to_string(model.n_features()) +
                             " features, got " + std::to_string(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (model.names()[i] == "r") vals[i] = normalize_rate(vals[i], rate_unit);
  return FeatureVector(model.names_handle(), std::move(vals));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

// ---------------------------------------------------------------------------

int cmd_price(const ModelChoice& choice, const std::string& point_csv,
              const std::string& rate_unit) {
  auto model = choice.build();
  const double price = model->evaluate(make_point(*model, point_csv, rate_unit));
  std::printf("%.7g\n", price);
  return 0;
}

int cmd_train(const std::string& input, const std::string& out_path, const std::string& kind,
              TrainConfig cfg) {
  std::vector<OptionRecord> records = load_option_records(input);
  if (kind != "all") {
    const OptionKind want = option_kind_from_string(kind);
    std::erase_if(records, [&](const OptionRecord& r) { return r.kind != want; });
  }
  const TrainResult result = train_surrogate(records, cfg);
  std::printf("records: %zu\ntrain RMSE: %.6g\ntest RMSE: %.6g\niterations: %d\n",
              records.size(), result.train_rmse, result.test_rmse, result.iterations);
  if (!out_path.empty()) {
    write_text_file(out_path, result.model->to_json_string());
    std::printf("model written to %s\n", out_path.c_str());
  }
  return 0;
}

/// Per-feature mean of a record file, the default baseline for
/// dataset-driven attribution.
FeatureVector mean_baseline(const PricingModel& model, const std::string& records_path) {
  const std::vector<OptionRecord> records = load_option_records(records_path);
  if (records.empty()) throw validation_error("baseline dataset is empty");
  if (model.names() != BsmModel::feature_names())
    throw contract_violation("--input baselines need the S,r,tau,K,sigma feature set");
  std::vector<double> mean(5, 0.0);
  for (const OptionRecord& rec : records) {
    const std::vector<double> f = rec.features();
    for (std::size_t i = 0; i < 5; ++i) mean[i] += f[i];
  }
  for (double& v : mean) v /= static_cast<double>(records.size());
  return FeatureVector(model.names_handle(), std::move(mean));
}

int cmd_attribute(const ModelChoice& choice, const std::string& baseline_csv,
                  const std::string& input_path, const std::string& explicand_csv,
                  const std::string& methods_csv, const QuadratureConfig& quad,
                  const std::string& rate_unit, const std::string& out_path,
                  const std::string& plot_path) {
  auto model = choice.build();
  if (baseline_csv.empty() && input_path.empty())
    throw contract_violation("attribute: provide --baseline or --input <records.csv>");
  const FeatureVector baseline = baseline_csv.empty()
                                     ? mean_baseline(*model, input_path)
                                     : make_point(*model, baseline_csv, rate_unit);
  const FeatureVector explicand = make_point(*model, explicand_csv, rate_unit);

  std::vector<AttributionResult> results;
  for (const std::string& name : split_list(methods_csv)) {
    AttributionEngine engine{method_from_string(name), quad};
    results.push_back(engine.run(*model, explicand, baseline));
  }
  emit(attribution_results_to_json(results), out_path);
  if (!plot_path.empty()) write_text_file(plot_path, attribution_plot_csv(results));
  return 0;
}

AuditGrid make_grid(const PricingModel& model, const std::string& grid_spec,
                    const FeatureVector& context, const FeatureVector& baseline,
                    const std::vector<double>& deltas) {
  std::vector<std::string> parts;
  std::stringstream ss(grid_spec);
  std::string field;
  while (std::getline(ss, field, ':')) parts.push_back(field);
  if (parts.size() != 4)
    throw contract_violation("--grid expects name:lo:hi:count (got '" + grid_spec + "')");
  const std::size_t index = context.index_of(parts[0]);
  AuditGrid grid = AuditGrid::linspace(model, index, std::stod(parts[1]), std::stod(parts[2]),
                                       static_cast<std::size_t>(std::stoul(parts[3])),
                                       context, baseline);
  grid.deltas = deltas;
  return grid;
}

int cmd_audit(const ModelChoice& choice, const ModelChoice& choice2,
              const std::string& axioms_csv, const std::string& methods_csv,
              const std::string& baseline_csv, const std::string& explicand_csv,
              const std::string& grid_spec, const std::vector<double>& deltas,
              const QuadratureConfig& quad, const std::string& rate_unit,
              const std::string& dummy_name, const std::string& domain_path,
              std::optional<double> tol, const std::string& out_path,
              bool fail_on_violation) {
  auto model = choice.build();
  const FeatureVector baseline = make_point(*model, baseline_csv, rate_unit);
  const FeatureVector explicand = make_point(*model, explicand_csv, rate_unit);
  const AuditGrid grid = make_grid(*model, grid_spec, explicand, baseline, deltas);
  AuditOptions opts;
  opts.tolerance = tol;

  ReportBundle bundle;
  for (const std::string& method_name : split_list(methods_csv)) {
    const AttributionEngine engine{method_from_string(method_name), quad};
    for (const std::string& axiom_name : split_list(axioms_csv)) {
      switch (axiom_from_string(axiom_name)) {
        case Axiom::aim:
          bundle.reports.push_back(check_aim(engine, *model, {grid}, opts));
          break;
        case Axiom::dim:
          bundle.reports.push_back(check_dim(engine, *model, grid, opts));
          break;
        case Axiom::dme:
          bundle.reports.push_back(check_marginal(engine, *model, grid, MarginalKind::dme, opts));
          break;
        case Axiom::rdme:
          bundle.reports.push_back(
              check_marginal(engine, *model, grid, MarginalKind::rdme, opts));
          break;
        case Axiom::ime:
          bundle.reports.push_back(check_marginal(engine, *model, grid, MarginalKind::ime, opts));
          break;
        case Axiom::fmd: {
          auto model_g = choice2.build();
          if (model_g->names() != model->names())
            throw contract_violation("audit fmd: --model2 must share the feature list");
          SharedFeatureMap map;
          map.alpha_f = map.alpha_g = grid.feature_index;
          for (std::size_t i = 0; i < model->n_features(); ++i)
            if (i != grid.feature_index) map.shared.emplace_back(i, i);
          map.g_context = explicand;
          map.g_baseline = baseline;
          bundle.reports.push_back(check_fmd(engine, *model, *model_g, map, grid, opts));
          break;
        }
        case Axiom::gd:
          if (dummy_name.empty())
            throw contract_violation("audit gd: --dummy <feature name> is required");
          bundle.reports.push_back(check_generalized_dummy(
              engine, *model, explicand.index_of(dummy_name), grid, opts));
          break;
        case Axiom::cg: {
          if (domain_path.empty())
            throw contract_violation("audit cg: --domain <json file> is required");
          const TrainingDomain domain = domain_from_json(read_text_file(domain_path));
          const AttributionResult result = engine.run(*model, explicand, baseline);
          bundle.reports.push_back(check_cg(result, domain));
          break;
        }
      }
    }
  }

  emit(report_bundle_to_json(bundle), out_path);
  if (fail_on_violation && bundle.any_violation()) return 1;
  return 0;
}

int cmd_vix(const std::string& chain_path, double forward, double rate, double tau) {
  const std::string text = read_text_file(chain_path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  VixInput input;
  input.forward = forward;
  input.rate = rate;
  input.tau = tau;
  std::vector<std::pair<double, std::pair<double, bool>>> rows;  // strike -> (quote, is_put)
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_list(line);
    if (!header_seen) {
      if (fields != std::vector<std::string>{"strike", "quote", "side"})
        throw parse_error("expected header 'strike,quote,side'", line_no);
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) throw parse_error("expected 3 fields", line_no);
    const double k = std::stod(fields[0]);
    const double q = std::stod(fields[1]);
    if (fields[2] != "put" && fields[2] != "call")
      throw parse_error("side must be put or call", line_no);
    rows.push_back({k, {q, fields[2] == "put"}});
  }
  std::sort(rows.begin(), rows.end());
  for (auto& [k, kv] : rows) {
    input.strikes.push_back(k);
    if (kv.second)
      input.put_quotes.push_back(kv.first);
    else
      input.call_quotes.push_back(kv.first);
  }
  std::printf("%.6g\n", vix_from_chain(input));
  return 0;
}

std::vector<FeatureVector> load_points_csv(const std::string& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  FeatureVector::NamesPtr names;
  std::vector<FeatureVector> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!names) {
      names = FeatureVector::make_names(split_list(line));
      continue;
    }
    std::vector<double> vals = parse_numbers(line);
    if (vals.size() != names->size())
      throw parse_error("expected " + std::to_string(names->size()) + " values", line_no);
    points.emplace_back(names, std::move(vals));
  }
  if (!names) throw parse_error("missing header row of feature names", line_no);
  return points;
}

int cmd_domain(const std::string& input, const std::string& mode_name,
               const std::string& hull_features_csv, double rho, const std::string& generate,
               std::size_t gen_n, const std::string& s_range_csv,
               const std::string& sigma_range_csv, double corr, std::uint64_t seed,
               const std::string& out_path) {
  std::vector<FeatureVector> points;
  if (generate == "leverage") {
    const std::vector<double> sr = parse_numbers(s_range_csv);
    const std::vector<double> vr = parse_numbers(sigma_range_csv);
    if (sr.size() != 2 || vr.size() != 2)
      throw contract_violation("--s-range/--sigma-range expect lo,hi");
    points = generate_leverage_data(gen_n, {sr[0], sr[1]}, {vr[0], vr[1]}, corr, seed);
  } else if (!input.empty()) {
    points = load_points_csv(input);
  } else {
    throw contract_violation("domain: provide --input or --generate leverage");
  }

  const DomainMode mode = domain_mode_from_string(mode_name);
  std::pair<std::size_t, std::size_t> hull_features{0, 1};
  if (!hull_features_csv.empty()) {
    const std::vector<std::string> parts = split_list(hull_features_csv);
    if (parts.size() != 2) throw contract_violation("--hull-features expects two names");
    hull_features = {points.front().index_of(parts[0]), points.front().index_of(parts[1])};
  }
  const TrainingDomain domain = fit_domain(points, mode, hull_features, rho);
  emit(domain_to_json(domain), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baseline attribution methods and risk-axiom audits for asset pricing models"};
  app.require_subcommand(1);

  ModelChoice choice, choice2;
  std::string rate_unit = "auto";
  std::string out_path, plot_path;
  QuadratureConfig quad;
  std::string quad_rule = "trapezoid";

  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--model", choice.source,
                    "bond | bsm-call | bsm-put | surrogate-file");
    cmd->add_option("--model-file", choice.file, "surrogate JSON path");
    cmd->add_option("--param", [&](const std::vector<std::string>& vals) {
      for (const std::string& v : vals) {
        if (v.rfind("T=", 0) == 0)
          choice.bond_maturity = std::stod(v.substr(2));
        else
          throw CLI::ValidationError("--param", "unknown parameter '" + v + "'");
      }
      return true;
    }, "model parameter, e.g. T=10 (bond maturity)");
    cmd->add_option("--rates", rate_unit, "rate unit in vectors: auto | percent | decimal");
  };
  auto add_quad_flags = [&](CLI::App* cmd) {
    cmd->add_option("--quad-rule", quad_rule, "trapezoid | gauss-legendre");
    cmd->add_option("--quad-points", quad.points, "quadrature points (default 256)");
    cmd->add_flag("--refine-check", quad.refine_check,
                  "re-run at 2x points and report the difference");
  };

  // price
  auto* price = app.add_subcommand("price", "evaluate a model at a point");
  std::string point_csv;
  add_model_flags(price);
  price->add_option("--point", point_csv, "feature values, comma separated")->required();

  // train
  auto* train = app.add_subcommand("train", "fit the MLP surrogate to option records");
  std::string train_input, train_kind = "all";
  TrainConfig train_cfg;
  std::string hidden_csv;
  bool raw_target = false;
  train->add_option("--input", train_input, "option records CSV")->required();
  train->add_option("--out", out_path, "model JSON output path");
  train->add_option("--kind", train_kind, "call | put | all (default all)");
  train->add_option("--max-iters", train_cfg.max_iters, "CG iteration cap (default 1000)");
  train->add_option("--lambda", train_cfg.l2_lambda, "L2 penalty (default 1e-3)");
  train->add_option("--split", train_cfg.split_fraction, "train fraction (default 0.75)");
  train->add_option("--hidden", hidden_csv, "hidden sizes, e.g. 32,16");
  train->add_option("--seed", train_cfg.seed, "RNG seed");
  train->add_flag("--raw-target", raw_target, "regress raw prices (no target z-score)");

  // attribute
  auto* attribute = app.add_subcommand("attribute", "BShap / IG attributions");
  std::string baseline_csv, explicand_csv, methods_csv = "bshap,ig", attr_input;
  add_model_flags(attribute);
  add_quad_flags(attribute);
  attribute->add_option("--baseline", baseline_csv,
                        "baseline vector (default: per-feature mean of --input)");
  attribute->add_option("--input", attr_input,
                        "records CSV whose feature means form the baseline");
  attribute->add_option("--explicand", explicand_csv)->required();
  attribute->add_option("--methods", methods_csv, "comma list of bshap, ig");
  attribute->add_option("--out", out_path, "result JSON path (default stdout)");
  attribute->add_option("--plot", plot_path, "plot-data CSV path");

  // audit
  auto* audit = app.add_subcommand("audit", "run axiom checks and write a report bundle");
  std::string axioms_csv, grid_spec, dummy_name, domain_path;
  std::vector<double> deltas;
  std::optional<double> tol;
  bool fail_on_violation = false;
  add_model_flags(audit);
  add_quad_flags(audit);
  audit->add_option("--axiom", axioms_csv, "comma list of aim,dim,dme,rdme,ime,fmd,gd,cg")
      ->required();
  audit->add_option("--method", methods_csv, "comma list of bshap, ig")->required();
  audit->add_option("--baseline", baseline_csv)->required();
  audit->add_option("--explicand", explicand_csv)->required();
  audit->add_option("--grid", grid_spec, "feature:lo:hi:count")->required();
  audit->add_option("--delta", deltas, "DIM increments (default: consecutive grid values)");
  audit->add_option("--model2", choice2.source, "second model for fmd");
  audit->add_option("--model2-file", choice2.file, "surrogate JSON for --model2");
  audit->add_option("--dummy", dummy_name, "dummy feature name for gd");
  audit->add_option("--domain", domain_path, "domain JSON for cg");
  audit->add_option("--tol", [&tol](const std::vector<std::string>& vals) {
    tol = std::stod(vals.front());
    return true;
  }, "violation tolerance override");
  audit->add_option("--out", out_path, "report JSON path (default stdout)");
  audit->add_flag("--fail-on-violation", fail_on_violation, "exit 1 when violated");

  // vix
  auto* vix = app.add_subcommand("vix", "model-free volatility from an option chain");
  std::string chain_path;
  double vix_forward = 0.0, vix_rate = 0.0, vix_tau = 30.0 / 365.0;
  vix->add_option("--chain", chain_path, "CSV with header strike,quote,side")->required();
  vix->add_option("--forward", vix_forward, "30-day forward level")->required();
  vix->add_option("--rate", vix_rate, "risk-free rate (decimal)");
  vix->add_option("--tau", vix_tau, "horizon in years (default 30/365)");

  // domain
  auto* domain = app.add_subcommand("domain", "fit a training domain");
  std::string domain_input, domain_mode = "axis-box", hull_features_csv, generate;
  std::string s_range_csv = "750,1450", sigma_range_csv = "0.15,0.9";
  std::size_t gen_n = 1000;
  double corr = -0.8, rho = 0.05;
  std::uint64_t seed = 0;
  domain->add_option("--input", domain_input, "points CSV (header = feature names)");
  domain->add_option("--mode", domain_mode, "axis-box | hull2d | point-cloud");
  domain->add_option("--hull-features", hull_features_csv, "two feature names for hull2d");
  domain->add_option("--rho", rho, "point-cloud radius (default 0.05)");
  domain->add_option("--generate", generate, "generate synthetic points: leverage");
  domain->add_option("--n", gen_n, "points to generate");
  domain->add_option("--s-range", s_range_csv, "lo,hi");
  domain->add_option("--sigma-range", sigma_range_csv, "lo,hi");
  domain->add_option("--corr", corr, "rank correlation target in (-1,0)");
  domain->add_option("--seed", seed, "RNG seed");
  domain->add_option("--out", out_path, "domain JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    quad.rule = quadrature_rule_from_string(quad_rule);
    if (price->parsed()) return cmd_price(choice, point_csv, rate_unit);
    if (train->parsed()) {
      if (!hidden_csv.empty()) {
        train_cfg.hidden.clear();
        for (const std::string& h : split_list(hidden_csv))
          train_cfg.hidden.push_back(std::stoi(h));
      }
      train_cfg.standardize_target = !raw_target;
      return cmd_train(train_input, out_path, train_kind, train_cfg);
    }
    if (attribute->parsed())
      return cmd_attribute(choice, baseline_csv, attr_input, explicand_csv, methods_csv, quad,
                           rate_unit, out_path, plot_path);
    if (audit->parsed())
      return cmd_audit(choice, choice2, axioms_csv, methods_csv, baseline_csv, explicand_csv,
                       grid_spec, deltas, quad, rate_unit, dummy_name, domain_path, tol,
                       out_path, fail_on_violation);
    if (vix->parsed()) return cmd_vix(chain_path, vix_forward, vix_rate, vix_tau);
    if (domain->parsed())
      return cmd_domain(domain_input, domain_mode, hull_features_csv, rho, generate, gen_n,
                        s_range_csv, sigma_range_csv, corr, seed, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
