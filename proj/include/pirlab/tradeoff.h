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

#ifndef PIRLAB_TRADEOFF_H_
#define PIRLAB_TRADEOFF_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "pirlab/rational.h"

namespace pirlab {

// Closed-form optimal download cost and common randomness under a total (s)
// or individual (w) leakage constraint. All values are exact; nothing here
// touches floating point.

struct TradeoffPoint {
  Rational constraint;
  // Set when the available common randomness is below the minimum: no scheme
  // meets the constraints, and capacity is reported as 0.
  bool infinite = false;
  Rational d_min;
  Rational rho_min;
  Rational capacity;
};

struct Thresholds {
  Rational total;       // s_t = (1 - 1/N^{K-1}) / (N-1)
  Rational individual;  // w_t = 1 / N^{K-1}
};

Thresholds thresholds(std::uint32_t databases, std::uint32_t messages);

// L * (1 + 1/N + ... + 1/N^{K-1}): the unconstrained PIR download cost.
Rational d_min_zero(std::uint32_t databases, std::uint32_t messages,
                    std::uint32_t length);

// Minimum common randomness per message symbol. May go negative past the
// threshold, where any non-negative amount suffices.
Rational rho_min_total(std::uint32_t databases, std::uint32_t messages,
                       const Rational& s);
Rational rho_min_individual(std::uint32_t databases, std::uint32_t messages,
                            const Rational& w);

TradeoffPoint d_min_total(std::uint32_t databases, std::uint32_t messages,
                          std::uint32_t length, const Rational& s,
                          const Rational& rho);
TradeoffPoint d_min_individual(std::uint32_t databases, std::uint32_t messages,
                               std::uint32_t length, const Rational& w,
                               const Rational& rho);

// Stated performance of the existing codes. Leakage values are normalized by L.
struct ReferencePerformance {
  std::uint64_t length = 0;
  Rational download_cost;
  Rational total_leakage;
  Rational individual_leakage;
  Rational rho;
};

// `code` is one of "sj", "tsc", "spir" (case-insensitive).
ReferencePerformance reference_performance(std::string_view code,
                                           std::uint32_t databases,
                                           std::uint32_t messages);

// (1 + 1/N + ... + 1/N^alpha)^{-1}.
Rational capacity_alpha(std::uint32_t databases, std::uint32_t alpha);

}  // namespace pirlab

#endif  // PIRLAB_TRADEOFF_H_
