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

#include "pirlab/tradeoff.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "pirlab/errors.h"

namespace pirlab {
namespace {

void require_system(std::uint32_t databases, std::uint32_t messages) {
  if (databases < 2) {
    throw ParameterError("N must be at least 2, got " +
                         std::to_string(databases));
  }
  if (messages < 2) {
    throw ParameterError("K must be at least 2, got " +
                         std::to_string(messages));
  }
}

void require_point(std::uint32_t length, const Rational& constraint,
                   const Rational& rho) {
  if (length < 1) throw ParameterError("L must be at least 1");
  if (constraint < 0) {
    throw ParameterError("leakage constraint must be non-negative, got " +
                         to_fraction_string(constraint));
  }
  if (rho < 0) {
    throw ParameterError("common randomness must be non-negative, got " +
                         to_fraction_string(rho));
  }
}

Rational paths(std::uint32_t databases, std::uint32_t messages) {
  return rational_pow(Rational(databases), messages - 1);
}

TradeoffPoint finish(TradeoffPoint point, const Rational& rho,
                     std::uint32_t length) {
  if (rho < point.rho_min) {
    point.infinite = true;
    point.d_min = 0;
    point.capacity = 0;
  } else {
    point.capacity = Rational(length) / point.d_min;
  }
  return point;
}

}  // namespace

Thresholds thresholds(std::uint32_t databases, std::uint32_t messages) {
  require_system(databases, messages);
  const Rational p = paths(databases, messages);
  return {(1 - 1 / p) / Rational(databases - 1), 1 / p};
}

Rational d_min_zero(std::uint32_t databases, std::uint32_t messages,
                    std::uint32_t length) {
  require_system(databases, messages);
  return Rational(length) *
         geometric_sum(Rational(1, databases), messages);
}

Rational rho_min_total(std::uint32_t databases, std::uint32_t messages,
                       const Rational& s) {
  require_system(databases, messages);
  const Rational p = paths(databases, messages);
  return Rational(1, databases - 1) - p / (p - 1) * s;
}

Rational rho_min_individual(std::uint32_t databases, std::uint32_t messages,
                            const Rational& w) {
  require_system(databases, messages);
  if (messages >= 3) return 0;
  return Rational(1, databases - 1) -
         Rational(databases, databases - 1) * w;
}

TradeoffPoint d_min_total(std::uint32_t databases, std::uint32_t messages,
                          std::uint32_t length, const Rational& s,
                          const Rational& rho) {
  require_system(databases, messages);
  require_point(length, s, rho);
  const Rational p = paths(databases, messages);
  TradeoffPoint point;
  point.constraint = s;
  point.rho_min = rho_min_total(databases, messages, s);
  if (s <= thresholds(databases, messages).total) {
    point.d_min = Rational(length) *
                  (Rational(databases, databases - 1) - s / (p - 1));
  } else {
    point.d_min = d_min_zero(databases, messages, length);
  }
  return finish(std::move(point), rho, length);
}

TradeoffPoint d_min_individual(std::uint32_t databases, std::uint32_t messages,
                               std::uint32_t length, const Rational& w,
                               const Rational& rho) {
  require_system(databases, messages);
  require_point(length, w, rho);
  TradeoffPoint point;
  point.constraint = w;
  point.rho_min = rho_min_individual(databases, messages, w);
  if (w <= thresholds(databases, messages).individual) {
    point.d_min = Rational(length) * (Rational(databases, databases - 1) -
                                      w / Rational(databases - 1));
  } else {
    point.d_min = d_min_zero(databases, messages, length);
  }
  return finish(std::move(point), rho, length);
}

ReferencePerformance reference_performance(std::string_view code,
                                           std::uint32_t databases,
                                           std::uint32_t messages) {
  require_system(databases, messages);
  std::string id(code);
  std::transform(id.begin(), id.end(), id.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  const Rational n(databases);
  const Rational p = paths(databases, messages);
  const Thresholds t = thresholds(databases, messages);

  ReferencePerformance perf;
  if (id == "sj") {
    const Rational all = p * n;  // N^K
    perf.length = static_cast<std::uint64_t>(
        boost::multiprecision::numerator(all));
    perf.download_cost = n * (all - 1) / (n - 1);
    perf.total_leakage = t.total;
    perf.individual_leakage = t.individual;
    perf.rho = 0;
  } else if (id == "tsc") {
    perf.length = databases - 1;
    perf.download_cost = (p * n - 1) / p;
    perf.total_leakage = t.total;
    perf.individual_leakage = t.individual;
    perf.rho = 0;
  } else if (id == "spir") {
    perf.length = databases - 1;
    perf.download_cost = n;
    perf.total_leakage = 0;
    perf.individual_leakage = 0;
    perf.rho = Rational(1, databases - 1);
  } else {
    throw ParameterError("unknown reference code '" + std::string(code) +
                         "' (expected sj, tsc or spir)");
  }
  return perf;
}

Rational capacity_alpha(std::uint32_t databases, std::uint32_t alpha) {
  if (databases < 2) throw ParameterError("N must be at least 2");
  if (alpha < 1) throw ParameterError("alpha must be at least 1");
  return 1 / geometric_sum(Rational(1, databases), alpha + 1);
}

}  // namespace pirlab
