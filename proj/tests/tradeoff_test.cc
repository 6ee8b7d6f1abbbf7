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

#include "gtest/gtest.h"

#include "pirlab/errors.h"
#include "pirlab/rational.h"
#include "pirlab/tradeoff.h"

namespace pirlab {
namespace {

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_EQ(parse_rational("-1/3"), Rational(-1, 3));
  EXPECT_THROW(parse_rational("1/0"), ParameterError);
  EXPECT_THROW(parse_rational("0.5"), ParameterError);
  EXPECT_THROW(parse_rational("1/-2"), ParameterError);
  EXPECT_THROW(parse_rational(""), ParameterError);
  EXPECT_EQ(to_fraction_string(Rational(2)), "2/1");
  EXPECT_EQ(to_fraction_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(format_decimal(4.0 / 9.0), "0.444444444444");
  EXPECT_EQ(format_decimal(0.0), "0");
  EXPECT_EQ(format_decimal(Rational(15, 8)), "1.875");
}

TEST(ThresholdsTest, Examples) {
  EXPECT_EQ(thresholds(3, 3).total, Rational(4, 9));
  EXPECT_EQ(thresholds(3, 3).individual, Rational(1, 9));
  EXPECT_EQ(thresholds(2, 2).total, Rational(1, 2));
  EXPECT_EQ(thresholds(2, 2).individual, Rational(1, 2));
}

TEST(ThresholdsTest, RatioIsGeometricSum) {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::uint32_t k = 2; k <= 6; ++k) {
      const Thresholds t = thresholds(n, k);
      Rational sum = 0, power = 1;
      for (std::uint32_t i = 0; i + 2 <= k; ++i, power *= n) sum += power;
      EXPECT_EQ(t.total / t.individual, sum);
    }
  }
}

TEST(DMinTotalTest, Examples) {
  const TradeoffPoint spir = d_min_total(2, 2, 1, 0, 1);
  EXPECT_FALSE(spir.infinite);
  EXPECT_EQ(spir.d_min, 2);
  EXPECT_EQ(spir.capacity, Rational(1, 2));
  const TradeoffPoint top = d_min_total(2, 2, 1, Rational(1, 2), 0);
  EXPECT_EQ(top.d_min, Rational(3, 2));
  EXPECT_EQ(top.d_min, d_min_zero(2, 2, 1));
  const TradeoffPoint starved = d_min_total(2, 2, 1, 0, Rational(1, 2));
  EXPECT_TRUE(starved.infinite);
  EXPECT_EQ(starved.capacity, 0);
}

TEST(DMinIndividualTest, Examples) {
  EXPECT_EQ(d_min_individual(3, 3, 2, Rational(1, 9), 0).d_min, Rational(26, 9));
  const TradeoffPoint ws = d_min_individual(2, 3, 1, 0, 0);
  EXPECT_EQ(ws.d_min, 2);
  EXPECT_EQ(ws.capacity, Rational(1, 2));
  EXPECT_TRUE(d_min_individual(2, 2, 1, 0, 0).infinite);
}

TEST(DMinTest, ParameterErrors) {
  EXPECT_THROW(d_min_total(1, 2, 1, 0, 1), ParameterError);
  EXPECT_THROW(d_min_total(2, 1, 1, 0, 1), ParameterError);
  EXPECT_THROW(d_min_total(2, 2, 0, 0, 1), ParameterError);
  EXPECT_THROW(d_min_total(2, 2, 1, -1, 1), ParameterError);
  EXPECT_THROW(d_min_individual(2, 2, 1, 0, -1), ParameterError);
}

TEST(DMinTest, AboveThresholdClamps) {
  EXPECT_EQ(d_min_total(3, 3, 2, 1, 0).d_min, d_min_zero(3, 3, 2));
  EXPECT_EQ(d_min_individual(3, 3, 2, 1, 0).d_min, d_min_zero(3, 3, 2));
}

// Independent evaluation of both closed forms below the threshold.
TEST(DMinTest, ClosedFormsBelowThreshold) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      const Rational pk = rational_pow(Rational(n), k - 1);
      for (int i = 0; i <= 4; ++i) {
        const Rational s = thresholds(n, k).total * i / 4;
        const Rational w = thresholds(n, k).individual * i / 4;
        EXPECT_EQ(d_min_total(n, k, 3, s, 1).d_min,
                  3 * (Rational(n, n - 1) - s / (pk - 1)));
        EXPECT_EQ(d_min_individual(n, k, 3, w, 1).d_min,
                  3 * (Rational(n, n - 1) - w / (n - 1)));
      }
    }
  }
}

TEST(DMinTest, FloorAndMonotone) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      const Rational floor = d_min_zero(n, k, n - 1);
      EXPECT_EQ(floor, (n - 1) * geometric_sum(Rational(1, n), k));
      Rational previous = d_min_total(n, k, n - 1, 0, 1).d_min;
      for (int i = 1; i <= 10; ++i) {
        const Rational s = thresholds(n, k).total * i / 8;
        const Rational d = d_min_total(n, k, n - 1, s, 1).d_min;
        EXPECT_LE(d, previous);
        EXPECT_GE(d, floor);
        EXPECT_EQ(d == floor, s >= thresholds(n, k).total);
        previous = d;
      }
    }
  }
}

TEST(RhoMinTest, TwoMessagesAgree) {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (int i = 0; i <= 4; ++i) {
      const Rational x = thresholds(n, 2).total * i / 4;
      EXPECT_EQ(rho_min_total(n, 2, x), rho_min_individual(n, 2, x));
    }
  }
  EXPECT_EQ(rho_min_individual(3, 3, 0), 0);
  EXPECT_EQ(rho_min_total(2, 2, 0), 1);
}

TEST(BudgetEquivalenceTest, ScaledBudgetsMatch) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      const Rational factor = geometric_sum(Rational(n), k - 1);
      for (int i = 0; i <= 4; ++i) {
        const Rational w = thresholds(n, k).individual * i / 4;
        EXPECT_EQ(d_min_total(n, k, 2, factor * w, 1).d_min,
                  d_min_individual(n, k, 2, w, 1).d_min);
      }
    }
  }
}

TEST(ReferencePerformanceTest, Examples) {
  const ReferencePerformance tsc = reference_performance("tsc", 3, 3);
  EXPECT_EQ(tsc.length, 2u);
  EXPECT_EQ(tsc.download_cost, Rational(26, 9));
  EXPECT_EQ(tsc.total_leakage, Rational(4, 9));
  EXPECT_EQ(tsc.individual_leakage, Rational(1, 9));
  EXPECT_EQ(tsc.rho, 0);
  const ReferencePerformance sj = reference_performance("SJ", 2, 2);
  EXPECT_EQ(sj.length, 4u);
  EXPECT_EQ(sj.download_cost, 6);
  EXPECT_EQ(sj.total_leakage, Rational(1, 2));
  EXPECT_EQ(sj.individual_leakage, Rational(1, 2));
  const ReferencePerformance spir = reference_performance("spir", 4, 5);
  EXPECT_EQ(spir.length, 3u);
  EXPECT_EQ(spir.download_cost, 4);
  EXPECT_EQ(spir.rho, Rational(1, 3));
  EXPECT_THROW(reference_performance("pir", 2, 2), ParameterError);
}

TEST(CapacityAlphaTest, Examples) {
  EXPECT_EQ(capacity_alpha(2, 1), Rational(2, 3));
  EXPECT_EQ(capacity_alpha(2, 2), Rational(4, 7));
  EXPECT_NEAR(to_double(capacity_alpha(2, 40)), 0.5, 1e-9);
  for (std::uint32_t a = 1; a < 10; ++a) {
    EXPECT_GT(capacity_alpha(3, a), capacity_alpha(3, a + 1));
  }
}

}  // namespace
}  // namespace pirlab
