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

#include "pirlab/commands.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "pirlab/audit.h"
#include "pirlab/errors.h"
#include "pirlab/report.h"
#include "pirlab/tradeoff.h"

namespace pirlab {
namespace {

bool is_mixed(SchemeId id) {
  return id == SchemeId::kMixedTotal || id == SchemeId::kMixedIndividual;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) {
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

// Runs `body`, mapping the library's error types onto exit codes.
template <typename Fn>
CommandResult guarded(Fn&& body) {
  try {
    return body();
  } catch (const ResourceError& e) {
    return {kExitResource, "", e.what()};
  } catch (const ParameterError& e) {
    return {kExitParameter, "", e.what()};
  } catch (const UsageError& e) {
    return {kExitParameter, "", e.what()};
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ParameterError("unknown format '" + std::string(name) +
                       "' (expected json or csv)");
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  if (text.empty()) return grid;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    grid.push_back(parse_rational(text.substr(
        start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return grid;
}

std::uint64_t resolve_cap(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("PIR_LAB_CAP");
  if (env == nullptr || *env == '\0') return kDefaultStateCap;
  const std::string_view text(env);
  std::uint64_t cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParameterError("PIR_LAB_CAP is not an unsigned integer: '" +
                         std::string(text) + "'");
  }
  return cap;
}

Scheme build_scheme(const RunConfig& config) {
  SchemeParams params{config.scheme, config.databases, config.messages,
                      config.order, std::nullopt};
  if (!is_mixed(config.scheme)) {
    if (config.budget) {
      throw ParameterError("--budget only applies to mixed-total and "
                           "mixed-individual");
    }
    return Scheme(params);
  }
  if (!config.budget) {
    throw ParameterError(std::string(scheme_name(config.scheme)) +
                         " needs --budget p/q");
  }
  const Thresholds limits = thresholds(config.databases, config.messages);
  const bool total = config.scheme == SchemeId::kMixedTotal;
  const Rational& limit = total ? limits.total : limits.individual;
  const char* symbol = total ? "s_t" : "w_t";
  Rational budget = *config.budget;
  if (budget < 0) {
    throw ParameterError("leakage budget must be non-negative, got " +
                         to_fraction_string(budget));
  }
  if (budget > limit) {
    if (!config.clamp_budget) {
      throw ParameterError(
          "budget " + to_fraction_string(budget) + " exceeds " + symbol +
          " = " + to_fraction_string(limit) +
          "; larger budgets buy nothing past the threshold. Pass "
          "--clamp-budget to audit at " + symbol);
    }
    budget = limit;
  }
  params.budget = budget;
  return Scheme(params);
}

CommandResult cmd_audit(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const Scheme scheme = build_scheme(config);
    const AuditReport report =
        audit_scheme(scheme, {config.cap, config.threads});
    CommandResult result;
    if (config.format == OutputFormat::kJson) {
      result.body = dump_report(report_to_json(report));
    } else {
      result.body = std::string(kSweepHeader) + "\n" + sweep_row(report) + "\n";
    }
    const auto problems = report.mismatches();
    if (!problems.empty()) {
      result.exit_code = kExitMismatch;
      result.message = "verification mismatch: " + join(problems);
    }
    return result;
  });
}

CommandResult cmd_sweep(const RunConfig& config,
                        const std::vector<Rational>& grid) {
  return guarded([&]() -> CommandResult {
    if (config.format != OutputFormat::kCsv) {
      throw ParameterError("sweep emits CSV only");
    }
    if (!is_mixed(config.scheme)) {
      throw ParameterError("sweep needs a budgeted scheme (mixed-total or "
                           "mixed-individual)");
    }
    std::string body = std::string(kSweepHeader) + "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const std::string where = "grid index " + std::to_string(i) + " (" +
                                to_fraction_string(grid[i]) + "): ";
      RunConfig point = config;
      point.budget = grid[i];
      try {
        const Scheme scheme = build_scheme(point);
        const AuditReport report =
            audit_scheme(scheme, {config.cap, config.threads});
        const auto problems = report.mismatches();
        if (!problems.empty()) {
          return {kExitMismatch, "", where + "verification mismatch: " + join(problems)};
        }
        body += sweep_row(report) + "\n";
      } catch (const ResourceError& e) {
        throw ResourceError(where + e.what(), e.required());
      } catch (const ParameterError& e) {
        throw ParameterError(where + e.what());
      }
    }
    return {kExitOk, body, ""};
  });
}

CommandResult cmd_verify(const AcceptanceOptions& options) {
  return guarded([&]() -> CommandResult {
    const std::vector<CriterionResult> results = run_acceptance(options);
    CommandResult out;
    std::size_t passed = 0;
    for (const CriterionResult& r : results) {
      out.body += format_criterion(r, !r.passed);
      if (r.passed) ++passed;
    }
    out.body += std::to_string(passed) + "/" + std::to_string(results.size()) +
                " criteria passed\n";
    if (passed != results.size()) out.exit_code = kExitMismatch;
    return out;
  });
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ParameterError("cannot open output file '" + path + "'");
  file << body;
  if (!file.flush()) throw ParameterError("failed writing '" + path + "'");
}

}  // namespace pirlab
