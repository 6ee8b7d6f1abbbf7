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

#ifndef PIRLAB_SCHEMES_H_
#define PIRLAB_SCHEMES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pirlab/algebra.h"
#include "pirlab/rational.h"

namespace pirlab {

enum class SchemeId { kTsc, kSpir, kWsPir, kMixedTotal, kMixedIndividual };

// "tsc", "spir", "wspir", "mixed-total", "mixed-individual".
std::string_view scheme_name(SchemeId id);
SchemeId parse_scheme_id(std::string_view name);

// Alphabet regimes of the message-keyed (weakly secure) code.
enum class WsPirCase {
  kNotApplicable,
  kLargeAlphabet,       // q >= 3
  kBinaryAlphabet,      // q = 2, N >= 3
  kBinaryTwoDatabases,  // q = N = 2: two half-length sub-instances
};

// How a realization masks its answer symbols.
enum class AnswerMode {
  kPlain,       // interference sum only; the all-dummy query is not answered
  kSharedKey,   // plus the databases' common random symbol S
  kMessageKey,  // plus the sum of every stored message symbol
};

struct SchemeParams {
  SchemeId id = SchemeId::kTsc;
  std::uint32_t databases = 2;  // N
  std::uint32_t messages = 2;   // K
  std::uint32_t order = 2;      // q
  // Leakage budget: s for mixed-total, w for mixed-individual. Absent otherwise.
  std::optional<Rational> budget;
};

// K rows by L columns of symbols; row k is message k. Columns are 1-indexed.
class MessageSet {
 public:
  MessageSet(std::uint32_t messages, std::uint32_t length, std::uint32_t order);

  // Message matrix number `index` in lexicographic order over the row-major
  // symbol sequence (W_{1,1} most significant).
  static MessageSet from_index(std::uint32_t messages, std::uint32_t length,
                               std::uint32_t order, std::uint64_t index);
  static MessageSet from_rows(
      const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t order);

  std::uint32_t messages() const { return messages_; }
  std::uint32_t length() const { return length_; }
  std::uint32_t order() const { return order_; }

  Symbol at(std::uint32_t k, std::uint32_t column) const;
  void set(std::uint32_t k, std::uint32_t column, Symbol value);
  std::vector<Symbol> row(std::uint32_t k) const;
  std::span<const std::uint32_t> raw() const { return values_; }

  friend bool operator==(const MessageSet&, const MessageSet&) = default;

 private:
  std::uint32_t messages_;
  std::uint32_t length_;
  std::uint32_t order_;
  std::vector<std::uint32_t> values_;
};

// The user's private randomness. `f` holds K-1 entries per independently
// drawn sub-key.
struct UserKey {
  std::optional<std::uint32_t> f0;
  std::vector<CyclicIndex> f;

  friend bool operator==(const UserKey&, const UserKey&) = default;
};

// What database n receives: the optional indicator bit and one K-vector of
// message indices per sub-instance.
struct Query {
  std::optional<std::uint32_t> f0;
  std::vector<std::vector<CyclicIndex>> parts;

  friend bool operator==(const Query&, const Query&) = default;
};

// Answer symbols in sub-instance order. A sub-instance whose query addresses
// only dummy columns in the plain branch contributes no symbol.
struct Answer {
  std::vector<Symbol> symbols;

  friend bool operator==(const Answer&, const Answer&) = default;
};

using CommonRandomness = std::optional<Symbol>;

template <typename T>
struct Weighted {
  T value;
  Rational probability;
};

// One of the five retrieval schemes with fixed (N, K, q, budget). Immutable;
// every member function is pure.
class Scheme {
 public:
  // Throws ParameterError for inadmissible parameters.
  explicit Scheme(SchemeParams params);

  const SchemeParams& params() const { return params_; }
  std::uint32_t databases() const { return params_.databases; }
  std::uint32_t messages() const { return params_.messages; }
  std::uint32_t order() const { return params_.order; }

  // L, in symbols.
  std::uint32_t message_length() const { return length_; }
  std::uint32_t instances() const { return instances_; }
  WsPirCase ws_case() const { return ws_case_; }
  bool has_indicator() const { return has_indicator_; }
  bool uses_shared_randomness() const {
    return keyed_mode_ == AnswerMode::kSharedKey;
  }

  // P(F_0 = 0): probability of the plain (leaky) branch. 1 for TSC, 0 for the
  // keyed pure schemes.
  const Rational& plain_probability() const { return p0_; }

  AnswerMode mode_for(std::optional<std::uint32_t> f0) const;

  std::vector<Weighted<UserKey>> key_support() const;
  std::vector<Weighted<CommonRandomness>> randomness_support() const;

  // One query per database for desired message k in [1, K].
  std::vector<Query> gen_queries(std::uint32_t k, const UserKey& key) const;

  // Answer of database n in [1, N].
  Answer gen_answer(std::uint32_t n, const Query& query,
                    const MessageSet& messages,
                    const CommonRandomness& shared) const;

  // Recovers row k from all N answers. Throws ProtocolError when the answer
  // lengths do not match what the queries demand.
  std::vector<Symbol> decode(std::uint32_t k, const UserKey& key,
                             std::span<const Answer> answers) const;

  // Shared-key symbols consumed by this realization (0 or 1).
  Rational key_usage(const UserKey& key) const;

 private:
  void validate_key(const UserKey& key) const;
  void validate_query(const Query& query) const;
  std::vector<CyclicIndex> retrieval_vector(std::uint32_t k, std::uint32_t n,
                                            std::span<const CyclicIndex> f) const;
  Symbol indexed(const MessageSet& messages, std::uint32_t k,
                 std::uint32_t instance, CyclicIndex column) const;
  std::uint32_t key_entries(AnswerMode mode) const;
  bool answers_part(AnswerMode mode, std::span<const CyclicIndex> part) const;

  SchemeParams params_;
  std::uint32_t length_ = 0;
  std::uint32_t instances_ = 1;
  WsPirCase ws_case_ = WsPirCase::kNotApplicable;
  bool has_indicator_ = false;
  AnswerMode keyed_mode_ = AnswerMode::kPlain;
  Rational p0_;
};

}  // namespace pirlab

#endif  // PIRLAB_SCHEMES_H_
