// SPDX-FileCopyrightText: © 2026 riskattr contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "riskattr/attribution_result.hpp"
#include "riskattr/audit.hpp"
#include "riskattr/domain.hpp"
#include "riskattr/option_record.hpp"

namespace riskattr {

/// Loads `S,r,tau,K,sigma,price,kind` CSV rows. An optional directive
/// line `# rates=percent|decimal` ahead of the header declares the rate
/// unit; percent columns are divided by 100 on ingestion. Rows keep their
/// 1-based line numbers for error reporting.
std::vector<OptionRecord> load_option_records(const std::string& path);

/// Serializes records back out (rates written as decimals).
std::string option_records_to_csv(const std::vector<OptionRecord>& records);
std::vector<OptionRecord> parse_option_records(const std::string& text);

struct ReportBundle {
  std::vector<AxiomReport> reports;

  bool any_violation() const;
};

/// Stable-key-order, pretty-printed JSON with a trailing newline;
/// bit-identical across runs on identical inputs.
std::string report_bundle_to_json(const ReportBundle& bundle);
std::string attribution_result_to_json(const AttributionResult& result);
std::string attribution_results_to_json(const std::vector<AttributionResult>& results);
std::string domain_to_json(const TrainingDomain& domain);
TrainingDomain domain_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

inline void write_report(const ReportBundle& bundle, const std::string& path) {
  write_text_file(path, report_bundle_to_json(bundle));
}

/// Plot-data CSV for attribution bar charts: one row per feature, one
/// column per method.
std::string attribution_plot_csv(const std::vector<AttributionResult>& results);

}  // namespace riskattr
