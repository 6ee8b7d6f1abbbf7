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

#ifndef PIRLAB_AUDIT_H_
#define PIRLAB_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/distribution.h"
#include "pirlab/enumerate.h"
#include "pirlab/rational.h"
#include "pirlab/schemes.h"

namespace pirlab {

inline constexpr double kLeakageTolerance = 1e-9;

enum class BudgetKind { kTotal, kIndividual };

// What the tradeoff formulas and the reference code performances promise for a
// scheme. Leakage values are normalized by L.
struct Expectation {
  Rational download_cost;
  Rational rho;
  BudgetKind kind = BudgetKind::kTotal;
  Rational budget;
  std::optional<Rational> total;       // I(W_{others}; view) / L
  std::optional<Rational> individual;  // I(W_j; view) / L for every j != k
};

Expectation expected_performance(const Scheme& scheme);

struct AuditOptions {
  std::uint64_t cap = kDefaultStateCap;
  // Worker count for the message-space partition; 0 means all hardware threads.
  unsigned threads = 0;
};

// Exact measurements for one desired index k.
struct IndexAudit {
  std::uint32_t k = 1;
  std::vector<double> individual;  // one per j != k, ascending j
  double total = 0.0;
  Rational download_cost;
  Rational rho;
  bool correct = true;
  bool normalized = true;
  // Per database n: the joint law of (Q_n, A_n, W_{1:K}, S).
  std::vector<ExactDist> database_views;
};

IndexAudit audit_index(const Scheme& scheme, std::uint32_t k,
                       const AuditOptions& options = {});

struct AuditReport {
  SchemeParams params;
  std::uint32_t message_length = 0;
  std::uint64_t state_count = 0;  // per desired index
  Rational download_achieved;
  Rational download_theory;
  // Entries for the desired index with the largest individual leakage.
  std::vector<double> individual_per_message;
  std::uint32_t worst_index = 1;
  double total_normalized = 0.0;  // worst case over k
  BudgetKind budget_kind = BudgetKind::kTotal;
  Rational budget;
  Rational rho_achieved;
  Rational rho_theory;
  bool privacy_exact = false;
  bool correctness = false;
  bool normalized = false;
  Expectation expected;
  std::vector<IndexAudit> per_index;  // database views released

  double max_individual() const;
  // The leakage measure the budget constrains.
  double leakage_achieved() const;

  // Human-readable description of every deviation from theory; empty when the
  // audit confirms the scheme.
  std::vector<std::string> mismatches(double tolerance = kLeakageTolerance) const;
  bool matches_theory(double tolerance = kLeakageTolerance) const {
    return mismatches(tolerance).empty();
  }
};

// Audits every desired index and keeps the worst case.
AuditReport audit_scheme(const Scheme& scheme, const AuditOptions& options = {});

}  // namespace pirlab

#endif  // PIRLAB_AUDIT_H_
