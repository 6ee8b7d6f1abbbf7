// Copyright 2026 The pirlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pirlab/report.h"

#include <algorithm>

namespace pirlab {
namespace {

double real(double value) { return round_significant(std::max(value, 0.0)); }

}  // namespace

nlohmann::json report_to_json(const AuditReport& report) {
  nlohmann::json params = {
      {"scheme", std::string(scheme_name(report.params.id))},
      {"N", report.params.databases},
      {"K", report.params.messages},
      {"q", report.params.order},
      {"L", report.message_length},
      {"budget", report.params.budget
                     ? nlohmann::json(to_fraction_string(*report.params.budget))
                     : nlohmann::json(nullptr)},
  };
  nlohmann::json individual = nlohmann::json::array();
  for (double v : report.individual_per_message) individual.push_back(real(v));

  return {
      {"params", params},
      {"state_count", report.state_count},
      {"download_cost",
       {{"achieved", to_fraction_string(report.download_achieved)},
        {"theoretical", to_fraction_string(report.download_theory)}}},
      {"leakage",
       {{"individual_per_message", individual},
        {"total_normalized", real(report.total_normalized)},
        {"budget", to_fraction_string(report.budget)}}},
      {"rho",
       {{"achieved", to_fraction_string(report.rho_achieved)},
        {"theoretical", to_fraction_string(report.rho_theory)}}},
      {"privacy_exact", report.privacy_exact},
      {"correctness", report.correctness},
  };
}

std::string dump_report(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

std::string sweep_row(const AuditReport& report) {
  const std::string fields[] = {
      format_decimal(report.budget),
      format_decimal(report.download_achieved),
      format_decimal(report.download_theory),
      format_decimal(std::max(report.leakage_achieved(), 0.0)),
      format_decimal(report.budget),
      format_decimal(report.rho_achieved),
      format_decimal(report.rho_theory),
  };
  std::string row;
  for (const std::string& field : fields) {
    if (!row.empty()) row += ',';
    row += field;
  }
  return row;
}

}  // namespace pirlab
