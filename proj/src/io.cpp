// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "riskattr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "riskattr/errors.hpp"

namespace riskattr {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_double(const std::string& s, std::size_t line_no, const std::string& col) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw parse_error("cannot parse '" + s + "' as a number for column " + col, line_no);
  }
}

}  // namespace

std::vector<OptionRecord> parse_option_records(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool percent_rates = false;
  bool header_seen = false;
  std::vector<OptionRecord> records;
  std::vector<std::size_t> bad_rows;
  std::string first_violation;

  const std::vector<std::string> expected = {"S", "r", "tau", "K", "sigma", "price", "kind"};
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[0] == '#') {
      const auto pos = line.find("rates=");
      if (pos != std::string::npos) {
        const std::string unit = split_csv_line(line.substr(pos + 6)).front();
        if (unit == "percent")
          percent_rates = true;
        else if (unit == "decimal")
          percent_rates = false;
        else
          throw parse_error("rates directive must be 'percent' or 'decimal'", line_no);
      }
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (!header_seen) {
      if (fields != expected)
        throw parse_error("expected header 'S,r,tau,K,sigma,price,kind'", line_no);
      header_seen = true;
      continue;
    }
    if (fields.size() != 7)
      throw parse_error("expected 7 comma-separated fields, got " +
                        std::to_string(fields.size()), line_no);
    OptionRecord rec;
    rec.S = parse_double(fields[0], line_no, "S");
    rec.r = parse_double(fields[1], line_no, "r");
    rec.tau = parse_double(fields[2], line_no, "tau");
    rec.K = parse_double(fields[3], line_no, "K");
    rec.sigma = parse_double(fields[4], line_no, "sigma");
    rec.price = parse_double(fields[5], line_no, "price");
    try {
      rec.kind = option_kind_from_string(fields[6]);
    } catch (const contract_violation&) {
      throw parse_error("kind must be 'call' or 'put', got '" + fields[6] + "'", line_no);
    }
    if (percent_rates) rec.r /= 100.0;
    rec.source_row = line_no;
    try {
      rec.validate();
    } catch (const validation_error& e) {
      bad_rows.push_back(line_no);
      if (first_violation.empty()) first_violation = e.what();
    }
    records.push_back(rec);
  }
  if (!header_seen) throw parse_error("missing header 'S,r,tau,K,sigma,price,kind'", line_no);
  if (!bad_rows.empty()) {
    std::string rows;
    for (std::size_t r : bad_rows) rows += (rows.empty() ? "" : ", ") + std::to_string(r);
    throw validation_error("invalid option records at rows [" + rows + "]; first: " +
                           first_violation);
  }
  return records;
}

std::vector<OptionRecord> load_option_records(const std::string& path) {
  return parse_option_records(read_text_file(path));
}

std::string option_records_to_csv(const std::vector<OptionRecord>& records) {
  std::ostringstream out;
  out.precision(17);
  out << "# rates=decimal\n";
  out << "S,r,tau,K,sigma,price,kind\n";
  for (const OptionRecord& rec : records)
    out << rec.S << ',' << rec.r << ',' << rec.tau << ',' << rec.K << ',' << rec.sigma << ','
        << rec.price << ',' << to_string(rec.kind) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

bool ReportBundle::any_violation() const {
  for (const AxiomReport& r : reports)
    if (r.verdict == Verdict::violated) return true;
  return false;
}

namespace {

nlohmann::ordered_json feature_vector_json(const FeatureVector& x) {
  return nlohmann::ordered_json(x.values());
}

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["points"] = nlohmann::ordered_json::array();
  for (const FeatureVector& p : w.points) j["points"].push_back(feature_vector_json(p));
  j["attributions"] = w.attributions;
  j["margin"] = w.margin;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

nlohmann::ordered_json report_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["axiom"] = to_string(r.axiom);
  j["method"] = to_string(r.method);
  j["verdict"] = to_string(r.verdict);
  j["tolerance_used"] = r.tolerance_used;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const Witness& w : r.witnesses) j["witnesses"].push_back(witness_json(w));
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

nlohmann::ordered_json result_json(const AttributionResult& r) {
  nlohmann::ordered_json j;
  j["method"] = to_string(r.method);
  j["features"] = r.explicand.names();
  j["attributions"] = r.attributions;
  j["completeness_residual"] = r.completeness_residual;
  j["n_model_evals"] = r.n_model_evals;
  if (r.refinement_delta) j["refinement_delta"] = *r.refinement_delta;
  return j;
}

}  // namespace

std::string report_bundle_to_json(const ReportBundle& bundle) {
  nlohmann::ordered_json j;
  j["reports"] = nlohmann::ordered_json::array();
  for (const AxiomReport& r : bundle.reports) j["reports"].push_back(report_json(r));
  return j.dump(2) + "\n";
}

std::string attribution_result_to_json(const AttributionResult& result) {
  return result_json(result).dump(2) + "\n";
}

std::string attribution_results_to_json(const std::vector<AttributionResult>& results) {
  nlohmann::ordered_json j;
  j["results"] = nlohmann::ordered_json::array();
  for (const AttributionResult& r : results) j["results"].push_back(result_json(r));
  return j.dump(2) + "\n";
}

std::string domain_to_json(const TrainingDomain& domain) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(domain.mode());
  j["names"] = domain.names();
  switch (domain.mode()) {
    case DomainMode::axis_box:
      j["lo"] = domain.box_lo();
      j["hi"] = domain.box_hi();
      break;
    case DomainMode::hull2d: {
      j["hull_features"] = {domain.hull_features().first, domain.hull_features().second};
      j["hull"] = domain.hull();
      j["lo"] = domain.box_lo();
      j["hi"] = domain.box_hi();
      break;
    }
    default:
      j["lo"] = domain.box_lo();
      j["hi"] = domain.box_hi();
      j["rho"] = domain.rho();
      j["points"] = domain.cloud();
      break;
  }
  return j.dump(2) + "\n";
}

TrainingDomain domain_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("domain json: ") + e.what(), 0);
  }
  try {
    const DomainMode mode = domain_mode_from_string(j.at("mode").get<std::string>());
    auto names = FeatureVector::make_names(j.at("names").get<std::vector<std::string>>());
    auto lo = j.at("lo").get<std::vector<double>>();
    auto hi = j.at("hi").get<std::vector<double>>();
    switch (mode) {
      case DomainMode::axis_box:
        return TrainingDomain::axis_box(names, std::move(lo), std::move(hi));
      case DomainMode::hull2d: {
        const auto hf = j.at("hull_features").get<std::vector<std::size_t>>();
        if (hf.size() != 2) throw validation_error("domain json: hull_features must be a pair");
        auto hull = j.at("hull").get<std::vector<std::array<double, 2>>>();
        return TrainingDomain::hull2d(names, hf[0], hf[1], std::move(hull), std::move(lo),
                                      std::move(hi));
      }
      default:
        return TrainingDomain::point_cloud(
            names, j.at("points").get<std::vector<std::vector<double>>>(), std::move(lo),
            std::move(hi), j.at("rho").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("domain json: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string attribution_plot_csv(const std::vector<AttributionResult>& results) {
  if (results.empty()) return "feature\n";
  std::ostringstream out;
  out.precision(17);
  out << "feature";
  for (const AttributionResult& r : results) out << ',' << to_string(r.method);
  out << '\n';
  const auto& names = results.front().explicand.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << names[i];
    for (const AttributionResult& r : results) out << ',' << r.attributions[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace riskattr
