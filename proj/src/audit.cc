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

#include "pirlab/audit.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "pirlab/errors.h"
#include "pirlab/tradeoff.h"

namespace pirlab {
namespace {

// Partial sums over a slice of the message space. Merging is exact rational
// addition, so the result does not depend on how the space was split.
struct Tally {
  Rational mass = 0;
  Rational download = 0;
  Rational usage = 0;
  bool correct = true;
  std::vector<JointDist> individual;
  JointDist total;
  std::vector<ExactDist> views;

  Tally(std::uint32_t messages, std::uint32_t databases)
      : individual(messages - 1), views(databases) {}

  void merge(const Tally& other) {
    mass += other.mass;
    download += other.download;
    usage += other.usage;
    correct = correct && other.correct;
    for (std::size_t i = 0; i < individual.size(); ++i) {
      individual[i].merge(other.individual[i]);
    }
    total.merge(other.total);
    for (std::size_t n = 0; n < views.size(); ++n) views[n].merge(other.views[n]);
  }
};

void record(const Scheme& scheme, std::uint32_t k, const JointState& state,
            Tally& tally) {
  const Rational& p = state.probability;
  tally.mass += p;

  std::uint32_t symbols = 0;
  for (const Answer& a : state.answers) {
    symbols += static_cast<std::uint32_t>(a.symbols.size());
  }
  tally.download += p * symbols;
  tally.usage += p * scheme.key_usage(state.key);

  try {
    if (scheme.decode(k, state.key, state.answers) != state.messages.row(k)) {
      tally.correct = false;
    }
  } catch (const ProtocolError&) {
    tally.correct = false;
  }

  std::size_t slot = 0;
  for (std::uint32_t j = 1; j <= scheme.messages(); ++j) {
    if (j == k) continue;
    const std::vector<Symbol> row = state.messages.row(j);
    tally.individual[slot++].add(encode::symbols(row), state.transcript, p);
  }
  tally.total.add(encode::messages(state.messages, k), state.transcript, p);

  const std::string world =
      encode::messages(state.messages) + encode::randomness(state.shared);
  for (std::size_t n = 0; n < state.queries.size(); ++n) {
    tally.views[n].add(encode::query(state.queries[n]) +
                           encode::answer(state.answers[n]) + world,
                       p);
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

Expectation expected_performance(const Scheme& scheme) {
  const std::uint32_t n = scheme.databases();
  const std::uint32_t k = scheme.messages();
  const std::uint32_t length = scheme.message_length();
  const Thresholds limits = thresholds(n, k);

  Expectation e;
  auto total_point = [&](const Rational& s) {
    const Rational rho = rho_min_total(n, k, s);
    e.kind = BudgetKind::kTotal;
    e.budget = s;
    e.rho = rho;
    e.download_cost =
        d_min_total(n, k, length, s, rho < 0 ? Rational(0) : rho).d_min;
  };
  auto individual_point = [&](const Rational& w) {
    const Rational rho = rho_min_individual(n, k, w);
    e.kind = BudgetKind::kIndividual;
    e.budget = w;
    e.rho = rho;
    e.download_cost =
        d_min_individual(n, k, length, w, rho < 0 ? Rational(0) : rho).d_min;
  };

  switch (scheme.params().id) {
    case SchemeId::kTsc:
      total_point(limits.total);
      e.total = limits.total;
      e.individual = limits.individual;
      break;
    case SchemeId::kSpir:
      total_point(0);
      e.total = 0;
      e.individual = 0;
      break;
    case SchemeId::kWsPir:
      individual_point(0);
      e.individual = 0;
      break;
    case SchemeId::kMixedTotal:
      total_point(*scheme.params().budget);
      e.total = *scheme.params().budget;
      break;
    case SchemeId::kMixedIndividual:
      individual_point(*scheme.params().budget);
      e.individual = *scheme.params().budget;
      if (k == 2) e.total = *scheme.params().budget;
      break;
  }
  return e;
}

IndexAudit audit_index(const Scheme& scheme, std::uint32_t k,
                       const AuditOptions& options) {
  const JointEnumerator enumerator(scheme, k, options.cap);
  const std::uint64_t messages = enumerator.message_count();
  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_threads(options.threads), messages));

  std::vector<Tally> tallies(workers,
                             Tally(scheme.messages(), scheme.databases()));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = messages * w / workers;
    const std::uint64_t end = messages * (w + 1) / workers;
    try {
      enumerator.visit(begin, end, [&](const JointState& state) {
        record(scheme, k, state, tallies[w]);
      });
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  Tally merged = std::move(tallies.front());
  for (unsigned w = 1; w < workers; ++w) merged.merge(tallies[w]);

  const double length = scheme.message_length();
  IndexAudit out;
  out.k = k;
  for (const JointDist& joint : merged.individual) {
    out.individual.push_back(mutual_information(joint, scheme.order()) /
                             length);
  }
  out.total = mutual_information(merged.total, scheme.order()) / length;
  out.download_cost = merged.download;
  out.rho = merged.usage / Rational(scheme.message_length());
  out.correct = merged.correct;
  out.normalized = merged.mass == 1;
  out.database_views = std::move(merged.views);
  return out;
}

double AuditReport::max_individual() const {
  double worst = 0.0;
  for (const IndexAudit& a : per_index) {
    for (double v : a.individual) worst = std::max(worst, v);
  }
  return worst;
}

double AuditReport::leakage_achieved() const {
  return budget_kind == BudgetKind::kTotal ? total_normalized
                                           : max_individual();
}

std::vector<std::string> AuditReport::mismatches(double tolerance) const {
  std::vector<std::string> out;
  if (!correctness) out.push_back("decoding failed on part of the support");
  if (!privacy_exact) {
    out.push_back("per-database view distribution depends on the desired index");
  }
  if (!normalized) out.push_back("joint distribution does not sum to 1");
  if (download_achieved != download_theory) {
    out.push_back("download cost " + to_fraction_string(download_achieved) +
                  " != " + to_fraction_string(download_theory));
  }
  if (rho_achieved != rho_theory) {
    out.push_back("common randomness " + to_fraction_string(rho_achieved) +
                  " != " + to_fraction_string(rho_theory));
  }
  for (const IndexAudit& a : per_index) {
    if (expected.total &&
        std::abs(a.total - to_double(*expected.total)) > tolerance) {
      out.push_back("total leakage " + format_decimal(a.total) + " at k=" +
                    std::to_string(a.k) + ", expected " +
                    to_fraction_string(*expected.total));
    }
    if (expected.individual) {
      for (double v : a.individual) {
        if (std::abs(v - to_double(*expected.individual)) > tolerance) {
          out.push_back("individual leakage " + format_decimal(v) + " at k=" +
                        std::to_string(a.k) + ", expected " +
                        to_fraction_string(*expected.individual));
          break;
        }
      }
    }
  }
  return out;
}

AuditReport audit_scheme(const Scheme& scheme, const AuditOptions& options) {
  AuditReport report;
  report.params = scheme.params();
  report.message_length = scheme.message_length();
  report.state_count = JointEnumerator::state_count(scheme);
  report.expected = expected_performance(scheme);
  report.download_theory = report.expected.download_cost;
  report.rho_theory = report.expected.rho;
  report.budget = report.expected.budget;
  report.budget_kind = report.expected.kind;

  for (std::uint32_t k = 1; k <= scheme.messages(); ++k) {
    report.per_index.push_back(audit_index(scheme, k, options));
  }

  const IndexAudit& first = report.per_index.front();
  report.privacy_exact = true;
  report.correctness = true;
  report.normalized = true;
  report.download_achieved = first.download_cost;
  report.rho_achieved = first.rho;
  double worst_individual = -1.0;
  for (const IndexAudit& a : report.per_index) {
    report.correctness = report.correctness && a.correct;
    report.normalized = report.normalized && a.normalized;
    report.privacy_exact =
        report.privacy_exact && a.database_views == first.database_views;
    report.download_achieved = std::max(report.download_achieved, a.download_cost);
    report.rho_achieved = std::max(report.rho_achieved, a.rho);
    report.total_normalized = std::max(report.total_normalized, a.total);
    const double local =
        a.individual.empty()
            ? 0.0
            : *std::max_element(a.individual.begin(), a.individual.end());
    if (local > worst_individual) {
      worst_individual = local;
      report.worst_index = a.k;
      report.individual_per_message = a.individual;
    }
  }
  for (IndexAudit& a : report.per_index) a.database_views.clear();
  return report;
}

}  // namespace pirlab
