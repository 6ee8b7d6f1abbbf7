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

#include <cmath>
#include <string>

#include "gtest/gtest.h"

#include "pirlab/distribution.h"
#include "pirlab/errors.h"

namespace pirlab {
namespace {

TEST(ExactDistTest, AccumulatesAndNormalizes) {
  ExactDist d;
  d.add("a", Rational(1, 3));
  d.add("b", Rational(1, 6));
  d.add("a", Rational(1, 6));
  d.add("c", Rational(0));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.weights().at("a"), Rational(1, 2));
  EXPECT_FALSE(d.normalized());
  d.add("c", Rational(1, 3));
  EXPECT_TRUE(d.normalized());
  EXPECT_THROW(d.add("d", Rational(-1, 3)), UsageError);
}

TEST(ExactDistTest, MergeIsAddition) {
  ExactDist a, b, both;
  a.add("x", Rational(1, 4));
  b.add("x", Rational(1, 4));
  b.add("y", Rational(1, 2));
  both.add("x", Rational(1, 2));
  both.add("y", Rational(1, 2));
  a.merge(b);
  EXPECT_EQ(a, both);
}

TEST(EntropyTest, Examples) {
  ExactDist uniform4;
  for (const char* k : {"0", "1", "2", "3"}) uniform4.add(k, Rational(1, 4));
  EXPECT_NEAR(entropy(uniform4, 2), 2.0, 1e-12);

  ExactDist point;
  point.add("only", 1);
  EXPECT_EQ(entropy(point, 2), 0.0);
  EXPECT_EQ(entropy(point, 7), 0.0);

  ExactDist dyadic;
  dyadic.add("a", Rational(1, 2));
  dyadic.add("b", Rational(1, 4));
  dyadic.add("c", Rational(1, 4));
  EXPECT_NEAR(entropy(dyadic, 2), 1.5, 1e-12);
}

TEST(EntropyTest, UniformOverPowerIsExponent) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (unsigned length = 1; length <= 4; ++length) {
      const unsigned outcomes = static_cast<unsigned>(std::pow(q, length));
      ExactDist d;
      for (unsigned i = 0; i < outcomes; ++i) d.add(std::to_string(i), Rational(1, outcomes));
      EXPECT_NEAR(entropy(d, q), length, 1e-12);
    }
  }
}

TEST(MutualInformationTest, PerfectDependence) {
  JointDist j;
  j.add("0", "0", Rational(1, 2));
  j.add("1", "1", Rational(1, 2));
  EXPECT_NEAR(mutual_information(j, 2), 1.0, 1e-12);
}

TEST(MutualInformationTest, IndependentIsExactlyZero) {
  JointDist j;
  const Rational px[] = {Rational(1, 3), Rational(2, 3)};
  const Rational pt[] = {Rational(1, 7), Rational(2, 7), Rational(4, 7)};
  for (int x = 0; x < 2; ++x) {
    for (int t = 0; t < 3; ++t) {
      j.add(std::to_string(x), std::to_string(t), px[x] * pt[t]);
    }
  }
  EXPECT_EQ(mutual_information(j, 2), 0.0);
}

// Against H(X) + H(T) - H(X,T) evaluated directly.
TEST(MutualInformationTest, MatchesEntropyIdentity) {
  JointDist j;
  j.add("a", "p", Rational(1, 5));
  j.add("a", "q", Rational(1, 10));
  j.add("b", "p", Rational(3, 10));
  j.add("c", "q", Rational(2, 5));
  ExactDist joint;
  for (const auto& [key, w] : j.weights()) joint.add(key.first + "|" + key.second, w);
  const double expected =
      entropy(j.marginal_x(), 3) + entropy(j.marginal_t(), 3) - entropy(joint, 3);
  const double mi = mutual_information(j, 3);
  EXPECT_NEAR(mi, expected, 1e-12);
  EXPECT_LE(mi, std::min(entropy(j.marginal_x(), 3), entropy(j.marginal_t(), 3)) + 1e-12);
}

TEST(MutualInformationTest, SymmetricAndRelabelingInvariant) {
  JointDist j, swapped, renamed;
  const struct { const char* x; const char* t; Rational w; } cells[] = {
      {"0", "a", Rational(1, 8)}, {"0", "b", Rational(3, 8)},
      {"1", "a", Rational(1, 4)}, {"1", "c", Rational(1, 4)}};
  for (const auto& c : cells) {
    j.add(c.x, c.t, c.w);
    swapped.add(c.t, c.x, c.w);
    renamed.add(std::string("msg-") + c.x, std::string(c.t) + c.t, c.w);
  }
  EXPECT_NEAR(mutual_information(j, 2), mutual_information(swapped, 2), 1e-15);
  EXPECT_NEAR(mutual_information(j, 2), mutual_information(renamed, 2), 1e-15);
}

}  // namespace
}  // namespace pirlab
