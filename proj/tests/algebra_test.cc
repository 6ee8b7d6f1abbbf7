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

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"

#include "pirlab/algebra.h"
#include "pirlab/errors.h"

namespace pirlab {
namespace {

TEST(SymbolTest, AddExamples) {
  EXPECT_EQ(sym_add(Symbol(1, 2), Symbol(1, 2)).value(), 0u);
  EXPECT_EQ(sym_add(Symbol(2, 3), Symbol(2, 3)).value(), 1u);
  EXPECT_EQ(sym_add(Symbol(0, 5), Symbol(4, 5)).value(), 4u);
}

TEST(SymbolTest, SubExamples) {
  EXPECT_EQ(sym_sub(Symbol(0, 3), Symbol(2, 3)).value(), 1u);
  EXPECT_EQ(sym_sub(Symbol(1, 2), Symbol(1, 2)).value(), 0u);
  EXPECT_EQ(sym_sub(Symbol(3, 7), Symbol(3, 7)).value(), 0u);
}

TEST(SymbolTest, MismatchedOrdersThrow) {
  EXPECT_THROW(sym_add(Symbol(1, 2), Symbol(1, 3)), UsageError);
  EXPECT_THROW(sym_sub(Symbol(1, 2), Symbol(1, 3)), UsageError);
}

TEST(SymbolTest, RejectsOutOfRange) {
  EXPECT_THROW((Symbol{3, 3}), UsageError);
  EXPECT_THROW(Alphabet{1}, ParameterError);
  EXPECT_THROW(Alphabet{kMaxOrder + 1}, ParameterError);
  EXPECT_NO_THROW(Alphabet{kMaxOrder});
}

// Group axioms, exhaustively for small orders.
TEST(SymbolTest, AbelianGroupSmallOrders) {
  for (std::uint32_t q = 2; q <= 8; ++q) {
    const Symbol zero = Symbol::zero(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Symbol x(a, q);
      EXPECT_EQ(x + zero, x);
      EXPECT_EQ((zero - x) + x, zero);
      for (std::uint32_t b = 0; b < q; ++b) {
        const Symbol y(b, q);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x + y) - y, x);
        for (std::uint32_t c = 0; c < q; ++c) {
          const Symbol z(c, q);
          EXPECT_EQ((x + y) + z, x + (y + z));
        }
      }
    }
  }
}

TEST(CyclicIndexTest, AddExamples) {
  EXPECT_EQ(idx_add({2, 3}, {3, 3}).value(), 2u);
  EXPECT_EQ(idx_add({1, 3}, {1, 3}).value(), 2u);
  EXPECT_EQ(idx_add({2, 2}, {2, 2}).value(), 2u);
}

TEST(CyclicIndexTest, SubExamples) {
  EXPECT_EQ(idx_sub({1, 3}, {2, 3}).value(), 2u);
  EXPECT_EQ(idx_sub({3, 3}, {3, 3}).value(), 3u);
  EXPECT_EQ(idx_sub({3, 4}, {1, 4}).value(), 2u);
}

TEST(CyclicIndexTest, Errors) {
  EXPECT_THROW(CyclicIndex(0, 3), UsageError);
  EXPECT_THROW(CyclicIndex(4, 3), UsageError);
  EXPECT_THROW(idx_sub({1, 3}, {1, 4}), UsageError);
}

TEST(CyclicIndexTest, InverseLaws) {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    for (std::uint32_t a = 1; a <= n; ++a) {
      for (std::uint32_t b = 1; b <= n; ++b) {
        const CyclicIndex x(a, n), y(b, n);
        const CyclicIndex sum = idx_add(x, y);
        const CyclicIndex diff = idx_sub(x, y);
        ASSERT_GE(sum.value(), 1u);
        ASSERT_LE(sum.value(), n);
        ASSERT_GE(diff.value(), 1u);
        ASSERT_LE(diff.value(), n);
        EXPECT_EQ(idx_sub(sum, y), x);
        EXPECT_EQ(idx_add(diff, y), x);
        // Same residue as plain modular arithmetic with N standing for 0.
        EXPECT_EQ(sum.value() % n, (a + b) % n);
      }
    }
  }
}

TEST(FStarTest, Examples) {
  const std::vector<CyclicIndex> a{{2, 3}, {1, 3}};
  const std::vector<CyclicIndex> b{{2, 2}, {2, 2}};
  const std::vector<CyclicIndex> c{{3, 3}, {3, 3}};
  EXPECT_EQ(f_star(a, 3).value(), 3u);
  EXPECT_EQ(f_star(b, 2).value(), 2u);
  EXPECT_EQ(f_star(c, 3).value(), 3u);
  EXPECT_EQ(f_star({}, 5).value(), 5u);
}

TEST(FStarTest, MatchesClosedForm) {
  const std::uint32_t n = 4;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = 1; b <= n; ++b) {
      for (std::uint32_t c = 1; c <= n; ++c) {
        const std::vector<CyclicIndex> f{{a, n}, {b, n}, {c, n}};
        EXPECT_EQ(f_star(f, n).value(), (a + b + c - 1) % n + 1);
      }
    }
  }
}

TEST(FStarTest, PermutationInvariant) {
  std::vector<CyclicIndex> f{{1, 5}, {4, 5}, {2, 5}, {5, 5}};
  const CyclicIndex expected = f_star(f, 5);
  std::sort(f.begin(), f.end(), [](CyclicIndex x, CyclicIndex y) {
    return x.value() < y.value();
  });
  do {
    EXPECT_EQ(f_star(f, 5), expected);
  } while (std::next_permutation(f.begin(), f.end(),
                                 [](CyclicIndex x, CyclicIndex y) {
                                   return x.value() < y.value();
                                 }));
}

}  // namespace
}  // namespace pirlab
