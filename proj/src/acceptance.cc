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

#include "pirlab/acceptance.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <unistd.h>

#include "pirlab/audit.h"
#include "pirlab/commands.h"
#include "pirlab/errors.h"
#include "pirlab/tradeoff.h"

namespace pirlab {
namespace {

namespace fs = std::filesystem;

constexpr double kExactZero = 1e-12;

std::string label(const SchemeParams& p) {
  std::string out = std::string(scheme_name(p.id)) + " N=" +
                    std::to_string(p.databases) + " K=" +
                    std::to_string(p.messages) + " q=" +
                    std::to_string(p.order);
  if (p.budget) out += " budget=" + to_fraction_string(*p.budget);
  return out;
}

class Suite {
 public:
  explicit Suite(const AcceptanceOptions& options) : options_(options) {}

  const AuditReport& audit(const SchemeParams& params) {
    const std::string key = label(params);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const Scheme scheme(params);
      it = cache_.emplace(key, audit_scheme(scheme, {options_.cap,
                                                     options_.threads}))
               .first;
    }
    return it->second;
  }

  // Mixed schemes honour the fault switch: the built scheme gets half the
  // budget while callers keep comparing against the nominal value.
  const AuditReport& audit_mixed(SchemeId id, std::uint32_t n, std::uint32_t k,
                                 std::uint32_t q, const Rational& nominal) {
    const Rational actual = options_.inject_f0_fault ? nominal / 2 : nominal;
    return audit({id, n, k, q, actual});
  }

  const std::map<std::string, AuditReport>& audits() const { return cache_; }
  const AcceptanceOptions& options() const { return options_; }

 private:
  AcceptanceOptions options_;
  std::map<std::string, AuditReport> cache_;
};

// Accumulates one criterion's verdict and failure notes.
class Check {
 public:
  Check(int id, std::string title) {
    result_.id = id;
    result_.title = std::move(title);
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) result_.details.push_back("FAILED: " + what);
  }
  void note(const std::string& what) { result_.details.push_back(what); }

  CriterionResult done() {
    result_.passed = true;
    for (const auto& d : result_.details) {
      if (d.rfind("FAILED", 0) == 0) result_.passed = false;
    }
    return result_;
  }

 private:
  CriterionResult result_;
};

// Multiples base * m / 4 for each listed m.
std::vector<Rational> quarters(const Rational& base,
                               std::initializer_list<int> multiples) {
  std::vector<Rational> out;
  for (int m : multiples) out.push_back(base * m / 4);
  return out;
}

bool near(double value, const Rational& target, double tolerance) {
  return std::abs(value - to_double(target)) <= tolerance;
}

std::string leak_summary(const AuditReport& r) {
  return label(r.params) + ": total=" + format_decimal(r.total_normalized) +
         " max_individual=" + format_decimal(r.max_individual()) +
         " D=" + to_fraction_string(r.download_achieved) +
         " rho=" + to_fraction_string(r.rho_achieved);
}

void expect_sound(Check& check, const AuditReport& r) {
  check.expect(r.privacy_exact, label(r.params) + " privacy");
  check.expect(r.correctness, label(r.params) + " correctness");
}

CriterionResult tsc_reference(Suite& suite) {
  Check check(1, "TSC reference reproduction");
  {
    const AuditReport& r = suite.audit({SchemeId::kTsc, 3, 3, 2, std::nullopt});
    check.note(leak_summary(r));
    for (const IndexAudit& a : r.per_index) {
      check.expect(near(a.total, Rational(4, 9), kLeakageTolerance),
                   "total leakage 4/9 at k=" + std::to_string(a.k));
      for (double v : a.individual) {
        check.expect(near(v, Rational(1, 9), kLeakageTolerance),
                     "individual leakage 1/9 at k=" + std::to_string(a.k));
      }
    }
    check.expect(r.download_achieved == Rational(26, 9), "D = 26/9");
    check.expect(r.rho_achieved == 0, "rho = 0");
    expect_sound(check, r);
  }
  {
    const AuditReport& r = suite.audit({SchemeId::kTsc, 2, 2, 2, std::nullopt});
    check.note(leak_summary(r));
    check.expect(r.download_achieved == Rational(3, 2), "D = 3/2");
    for (const IndexAudit& a : r.per_index) {
      check.expect(near(a.total, Rational(1, 2), kLeakageTolerance),
                   "total leakage 1/2");
      check.expect(near(a.individual.at(0), Rational(1, 2), kLeakageTolerance),
                   "individual leakage 1/2");
    }
    expect_sound(check, r);
  }
  return check.done();
}

CriterionResult spir_reference(Suite& suite) {
  Check check(2, "SPIR-variant reproduction");
  for (auto [n, k, q] : {std::tuple{2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 3u, 3u}}) {
    const AuditReport& r = suite.audit({SchemeId::kSpir, n, k, q, std::nullopt});
    check.note(leak_summary(r));
    for (const IndexAudit& a : r.per_index) {
      check.expect(a.total <= kExactZero, label(r.params) + " total leakage 0");
      for (double v : a.individual) {
        check.expect(v <= kExactZero, label(r.params) + " individual leakage 0");
      }
    }
    check.expect(r.download_achieved == Rational(n), label(r.params) + " D = N");
    check.expect(r.rho_achieved == Rational(1, n - 1),
                 label(r.params) + " rho = 1/(N-1)");
  }
  return check.done();
}

CriterionResult wspir_cases(Suite& suite) {
  Check check(3, "WS-PIR all three cases");
  const std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, WsPirCase>
      cases[] = {{2, 3, 3, WsPirCase::kLargeAlphabet},
                 {3, 3, 2, WsPirCase::kBinaryAlphabet},
                 {2, 3, 2, WsPirCase::kBinaryTwoDatabases}};
  for (const auto& [n, k, q, expected_case] : cases) {
    const SchemeParams params{SchemeId::kWsPir, n, k, q, std::nullopt};
    check.expect(Scheme(params).ws_case() == expected_case,
                 label(params) + " alphabet case");
    const AuditReport& r = suite.audit(params);
    check.note(leak_summary(r) + " L=" + std::to_string(r.message_length));
    for (const IndexAudit& a : r.per_index) {
      for (double v : a.individual) {
        check.expect(v <= kExactZero, label(params) + " individual leakage 0 at k=" +
                                          std::to_string(a.k));
      }
    }
    check.expect(r.rho_achieved == 0, label(params) + " rho = 0");
    check.expect(Rational(r.message_length) / r.download_achieved ==
                     1 - Rational(1, n),
                 label(params) + " rate 1 - 1/N");
    if (expected_case == WsPirCase::kBinaryTwoDatabases) {
      check.expect(r.message_length == 2, label(params) + " L = 2");
    }
  }
  return check.done();
}

CriterionResult mixed_total_points(Suite& suite) {
  Check check(4, "Mixed-total Pareto points");
  for (auto [n, k, q] : {std::tuple{2u, 2u, 2u}, {3u, 3u, 2u}}) {
    const Rational st = thresholds(n, k).total;
    for (const Rational& s : quarters(st, {1, 2, 3, 4})) {
      const AuditReport& r = suite.audit_mixed(SchemeId::kMixedTotal, n, k, q, s);
      const std::string where = "N=" + std::to_string(n) + " K=" +
                                std::to_string(k) + " s=" + to_fraction_string(s);
      check.note(where + ": total=" + format_decimal(r.total_normalized) +
                 " D=" + to_fraction_string(r.download_achieved) +
                 " rho=" + to_fraction_string(r.rho_achieved));
      for (const IndexAudit& a : r.per_index) {
        check.expect(near(a.total, s, kLeakageTolerance),
                     where + " total leakage = s at k=" + std::to_string(a.k));
      }
      const Rational rho = rho_min_total(n, k, s);
      check.expect(r.download_achieved ==
                       d_min_total(n, k, n - 1, s, rho).d_min,
                   where + " D = D_min(s)");
      check.expect(r.rho_achieved == rho, where + " rho = rho_min(s)");
    }
  }
  return check.done();
}

CriterionResult mixed_individual_points(Suite& suite) {
  Check check(5, "Mixed-individual Pareto points");
  for (auto [n, k, q] : {std::tuple{2u, 3u, 3u}, {3u, 3u, 2u}}) {
    const Rational wt = thresholds(n, k).individual;
    for (const Rational& w : quarters(wt, {1, 2, 4})) {
      const AuditReport& r =
          suite.audit_mixed(SchemeId::kMixedIndividual, n, k, q, w);
      const std::string where = "N=" + std::to_string(n) + " K=" +
                                std::to_string(k) + " q=" + std::to_string(q) +
                                " w=" + to_fraction_string(w);
      check.note(where + ": max_individual=" +
                 format_decimal(r.max_individual()) +
                 " D=" + to_fraction_string(r.download_achieved) +
                 " rho=" + to_fraction_string(r.rho_achieved));
      check.expect(near(r.max_individual(), w, kLeakageTolerance),
                   where + " max individual leakage = w");
      check.expect(r.download_achieved ==
                       d_min_individual(n, k, r.message_length, w, 0).d_min,
                   where + " D = D_min(w)");
      check.expect(r.rho_achieved == 0, where + " rho = 0");
    }
  }
  // Two messages: individual and total leakage coincide.
  const Rational st = thresholds(2, 2).total;
  for (const Rational& w : quarters(st, {1, 2, 3, 4})) {
    const AuditReport& r =
        suite.audit_mixed(SchemeId::kMixedIndividual, 2, 2, 2, w);
    const std::string where = "N=2 K=2 w=" + to_fraction_string(w);
    check.note(where + ": total=" + format_decimal(r.total_normalized) +
               " D=" + to_fraction_string(r.download_achieved) +
               " rho=" + to_fraction_string(r.rho_achieved));
    check.expect(near(r.total_normalized, w, kLeakageTolerance) &&
                     near(r.max_individual(), w, kLeakageTolerance),
                 where + " leakage = w");
    const Rational rho = rho_min_total(2, 2, w);
    check.expect(rho == rho_min_individual(2, 2, w), where + " rho minima agree");
    check.expect(r.download_achieved == d_min_total(2, 2, 1, w, rho).d_min,
                 where + " D = D_min(s=w)");
    check.expect(r.rho_achieved == rho, where + " rho = rho_min(s=w)");
  }
  return check.done();
}

CriterionResult budget_equivalence() {
  Check check(6, "Total/individual tradeoff equivalence");
  for (auto [n, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 3u}, {4u, 2u}}) {
    const Rational wt = thresholds(n, k).individual;
    const Rational factor = geometric_sum(Rational(n), k - 1);
    for (const Rational& w : quarters(wt, {0, 1, 2, 3, 4})) {
      const std::uint32_t length = n - 1;
      const TradeoffPoint total = d_min_total(n, k, length, factor * w, 1);
      const TradeoffPoint individual = d_min_individual(n, k, length, w, 1);
      check.expect(!total.infinite && !individual.infinite &&
                       total.d_min == individual.d_min,
                   "N=" + std::to_string(n) + " K=" + std::to_string(k) +
                       " w=" + to_fraction_string(w));
    }
    check.note("N=" + std::to_string(n) + " K=" + std::to_string(k) +
               ": s' = " + to_fraction_string(factor) + " w on 5 points");
  }
  return check.done();
}

CriterionResult capacity_staircase() {
  Check check(7, "Capacity staircase");
  for (std::uint32_t n : {2u, 3u, 4u}) {
    for (std::uint32_t k : {2u, 3u, 4u}) {
      const std::uint32_t length = n - 1;
      const std::string where = "N=" + std::to_string(n) + " K=" + std::to_string(k);
      const Rational pir = Rational(length) / d_min_zero(n, k, length);
      check.expect(capacity_alpha(n, k - 1) == pir, where + " alpha=K-1 is C_PIR");
      for (std::uint32_t alpha : {k - 1, k, k + 1}) {
        const Rational top = rational_pow(Rational(n), alpha);
        const Rational s = (rational_pow(Rational(n), k - 1) - 1) /
                           (top * Rational(n - 1));
        const Rational w = 1 / top;
        const TradeoffPoint strong =
            d_min_total(n, k, length, s, rho_min_total(n, k, s));
        const Rational rho_w = rho_min_individual(n, k, w);
        const TradeoffPoint weak =
            d_min_individual(n, k, length, w, rho_w < 0 ? Rational(0) : rho_w);
        const Rational expected = capacity_alpha(n, alpha);
        check.expect(strong.capacity == expected && weak.capacity == expected,
                     where + " alpha=" + std::to_string(alpha));
      }
    }
  }
  check.note("N in {2,3,4}, K in {2,3,4}, alpha in {K-1, K, K+1}");
  return check.done();
}

CriterionResult privacy_correctness(Suite& suite) {
  Check check(8, "Privacy and correctness universality");
  for (const auto& [name, report] : suite.audits()) {
    check.expect(report.privacy_exact, name + " privacy");
    check.expect(report.correctness, name + " correctness");
    check.expect(report.normalized, name + " distribution sums to 1");
  }
  check.note(std::to_string(suite.audits().size()) + " audited configurations");
  return check.done();
}

CriterionResult message_sizes(Suite& suite) {
  Check check(9, "Message size");
  std::vector<SchemeParams> constructed;
  for (const auto& [name, report] : suite.audits()) {
    constructed.push_back(report.params);
  }
  for (std::uint32_t k : {3u, 4u, 5u}) {
    constructed.push_back({SchemeId::kWsPir, 2, k, 2, std::nullopt});
    constructed.push_back({SchemeId::kMixedIndividual, 2, k, 2, Rational(0)});
    constructed.push_back({SchemeId::kWsPir, 4, k, 2, std::nullopt});
  }
  constructed.push_back({SchemeId::kTsc, 5, 4, 3, std::nullopt});
  constructed.push_back({SchemeId::kSpir, 6, 2, 7, std::nullopt});
  constructed.push_back({SchemeId::kMixedTotal, 4, 3, 5, Rational(0)});
  for (const SchemeParams& p : constructed) {
    const Scheme scheme(p);
    const bool doubled = (p.id == SchemeId::kWsPir ||
                          p.id == SchemeId::kMixedIndividual) &&
                         p.order == 2 && p.databases == 2 && p.messages >= 3;
    const std::uint32_t expected = doubled ? 2 : p.databases - 1;
    check.expect(scheme.message_length() == expected,
                 label(p) + " L=" + std::to_string(scheme.message_length()));
  }
  check.note(std::to_string(constructed.size()) + " constructed schemes");
  return check.done();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CriterionResult sweep_determinism(Suite& suite) {
  Check check(10, "Sweep determinism");
  RunConfig config;
  config.scheme = SchemeId::kMixedTotal;
  config.format = OutputFormat::kCsv;
  config.cap = suite.options().cap;
  config.threads = suite.options().threads;
  const std::vector<Rational> grid = parse_grid("0/1,1/8,1/4,3/8,1/2");

  std::ostringstream stem;
  stem << "pirlab-sweep-" << ::getpid();
  const fs::path dir = fs::temp_directory_path();
  std::string bytes[2];
  for (int run = 0; run < 2; ++run) {
    const CommandResult result = cmd_sweep(config, grid);
    if (result.exit_code == kExitResource) {
      throw ResourceError(result.message, 0);
    }
    check.expect(result.exit_code == kExitOk, "sweep exit code: " + result.message);
    const fs::path path = dir / (stem.str() + "-" + std::to_string(run) + ".csv");
    write_output(path.string(), result.body);
    bytes[run] = read_file(path);
    fs::remove(path);
  }
  check.expect(!bytes[0].empty() && bytes[0] == bytes[1],
               "two sweeps produced different bytes");
  check.note(std::to_string(bytes[0].size()) + " identical bytes");
  return check.done();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  Suite suite(options);
  std::vector<CriterionResult> results;
  results.push_back(tsc_reference(suite));
  results.push_back(spir_reference(suite));
  results.push_back(wspir_cases(suite));
  results.push_back(mixed_total_points(suite));
  results.push_back(mixed_individual_points(suite));
  results.push_back(budget_equivalence());
  results.push_back(capacity_staircase());
  results.push_back(privacy_correctness(suite));
  results.push_back(message_sizes(suite));
  results.push_back(sweep_determinism(suite));
  return results;
}

std::string format_criterion(const CriterionResult& result, bool verbose) {
  std::string out = std::string(result.passed ? "PASS" : "FAIL") + "  " +
                    (result.id < 10 ? " " : "") + std::to_string(result.id) +
                    "  " + result.title + "\n";
  if (verbose) {
    for (const std::string& d : result.details) out += "        " + d + "\n";
  }
  return out;
}

}  // namespace pirlab
