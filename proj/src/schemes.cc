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

#include "pirlab/schemes.h"

#include <string>

#include "pirlab/errors.h"
#include "pirlab/tradeoff.h"

namespace pirlab {
namespace {

constexpr std::string_view kNames[] = {"tsc", "spir", "wspir", "mixed-total",
                                       "mixed-individual"};

WsPirCase classify_alphabet(std::uint32_t databases, std::uint32_t order) {
  if (order >= 3) return WsPirCase::kLargeAlphabet;
  if (databases >= 3) return WsPirCase::kBinaryAlphabet;
  return WsPirCase::kBinaryTwoDatabases;
}

// Advances `digits` (each in [1, N]) to the next tuple in lexicographic order.
// Returns false after the last tuple.
bool next_tuple(std::vector<CyclicIndex>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    const std::uint32_t n = digits[i].modulus();
    if (digits[i].value() < n) {
      digits[i] = CyclicIndex(digits[i].value() + 1, n);
      return true;
    }
    digits[i] = CyclicIndex(1, n);
  }
  return false;
}

CyclicIndex dual(CyclicIndex x) {
  return CyclicIndex(x.modulus() + 1 - x.value(), x.modulus());
}

}  // namespace

std::string_view scheme_name(SchemeId id) {
  return kNames[static_cast<int>(id)];
}

SchemeId parse_scheme_id(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (kNames[i] == name) return static_cast<SchemeId>(i);
  }
  throw ParameterError("unknown scheme '" + std::string(name) +
                       "' (expected tsc, spir, wspir, mixed-total or "
                       "mixed-individual)");
}

MessageSet::MessageSet(std::uint32_t messages, std::uint32_t length,
                       std::uint32_t order)
    : messages_(messages),
      length_(length),
      order_(Alphabet(order).order()),
      values_(static_cast<std::size_t>(messages) * length, 0) {}

MessageSet MessageSet::from_index(std::uint32_t messages, std::uint32_t length,
                                  std::uint32_t order, std::uint64_t index) {
  MessageSet set(messages, length, order);
  for (std::size_t i = set.values_.size(); i-- > 0;) {
    set.values_[i] = static_cast<std::uint32_t>(index % order);
    index /= order;
  }
  if (index != 0) throw UsageError("message index out of range");
  return set;
}

MessageSet MessageSet::from_rows(
    const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t order) {
  if (rows.empty()) throw UsageError("message set needs at least one row");
  MessageSet set(static_cast<std::uint32_t>(rows.size()),
                 static_cast<std::uint32_t>(rows.front().size()), order);
  for (std::uint32_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != set.length_) {
      throw UsageError("ragged message rows");
    }
    for (std::uint32_t c = 0; c < set.length_; ++c) {
      set.set(k + 1, c + 1, Symbol(rows[k][c], order));
    }
  }
  return set;
}

Symbol MessageSet::at(std::uint32_t k, std::uint32_t column) const {
  if (k < 1 || k > messages_ || column < 1 || column > length_) {
    throw UsageError("message position (" + std::to_string(k) + ", " +
                     std::to_string(column) + ") out of range");
  }
  return Symbol(values_[(k - 1) * length_ + column - 1], order_);
}

void MessageSet::set(std::uint32_t k, std::uint32_t column, Symbol value) {
  if (k < 1 || k > messages_ || column < 1 || column > length_) {
    throw UsageError("message position out of range");
  }
  if (value.order() != order_) throw UsageError("symbol from another alphabet");
  values_[(k - 1) * length_ + column - 1] = value.value();
}

std::vector<Symbol> MessageSet::row(std::uint32_t k) const {
  std::vector<Symbol> out;
  out.reserve(length_);
  for (std::uint32_t c = 1; c <= length_; ++c) out.push_back(at(k, c));
  return out;
}

Scheme::Scheme(SchemeParams params) : params_(std::move(params)) {
  const std::uint32_t n = params_.databases;
  const std::uint32_t k = params_.messages;
  Alphabet alphabet(params_.order);
  if (n < 2 || n > kMaxOrder) {
    throw ParameterError("number of databases must be in [2, 65535], got " +
                         std::to_string(n));
  }
  if (k < 2 || k > kMaxOrder) {
    throw ParameterError("number of messages must be in [2, 65535], got " +
                         std::to_string(k));
  }
  const bool mixed = params_.id == SchemeId::kMixedTotal ||
                     params_.id == SchemeId::kMixedIndividual;
  if (mixed && !params_.budget) {
    throw ParameterError(std::string(scheme_name(params_.id)) +
                         " requires a leakage budget");
  }
  if (!mixed && params_.budget) {
    throw ParameterError("a leakage budget only applies to mixed schemes");
  }

  const Rational paths = rational_pow(Rational(n), k - 1);  // N^{K-1}
  const Thresholds limits = thresholds(n, k);
  switch (params_.id) {
    case SchemeId::kTsc:
      p0_ = 1;
      break;
    case SchemeId::kSpir:
      keyed_mode_ = AnswerMode::kSharedKey;
      p0_ = 0;
      break;
    case SchemeId::kWsPir:
      if (k < 3) {
        throw ParameterError(
            "wspir needs K >= 3; with two messages use spir, which already "
            "meets the minimum common randomness");
      }
      keyed_mode_ = AnswerMode::kMessageKey;
      ws_case_ = classify_alphabet(n, params_.order);
      p0_ = 0;
      break;
    case SchemeId::kMixedTotal: {
      const Rational& s = *params_.budget;
      if (s < 0 || s > limits.total) {
        throw ParameterError("total leakage budget " + to_fraction_string(s) +
                             " outside [0, s_t = " +
                             to_fraction_string(limits.total) + "]");
      }
      has_indicator_ = true;
      keyed_mode_ = AnswerMode::kSharedKey;
      p0_ = paths * Rational(n - 1) * s / (paths - 1);
      break;
    }
    case SchemeId::kMixedIndividual: {
      const Rational& w = *params_.budget;
      if (w < 0 || w > limits.individual) {
        throw ParameterError("individual leakage budget " +
                             to_fraction_string(w) + " outside [0, w_t = " +
                             to_fraction_string(limits.individual) + "]");
      }
      has_indicator_ = true;
      if (k == 2) {
        // Individual and total leakage coincide: run the shared-key mixture.
        keyed_mode_ = AnswerMode::kSharedKey;
      } else {
        keyed_mode_ = AnswerMode::kMessageKey;
        ws_case_ = classify_alphabet(n, params_.order);
      }
      p0_ = w * paths;
      break;
    }
  }
  instances_ = ws_case_ == WsPirCase::kBinaryTwoDatabases ? 2 : 1;
  length_ = instances_ * (n - 1);
}

AnswerMode Scheme::mode_for(std::optional<std::uint32_t> f0) const {
  if (!has_indicator_) {
    return params_.id == SchemeId::kTsc ? AnswerMode::kPlain : keyed_mode_;
  }
  if (!f0) throw UsageError("indicator bit missing");
  if (*f0 > 1) throw UsageError("indicator bit must be 0 or 1");
  return *f0 == 0 ? AnswerMode::kPlain : keyed_mode_;
}

std::uint32_t Scheme::key_entries(AnswerMode mode) const {
  // The plain branch of the two-instance layout draws an independent key per
  // sub-instance; the message-keyed pair derives its second key as the dual.
  const std::uint32_t per_key = params_.messages - 1;
  return (instances_ == 2 && mode == AnswerMode::kPlain) ? 2 * per_key
                                                         : per_key;
}

std::vector<Weighted<UserKey>> Scheme::key_support() const {
  std::vector<std::pair<std::optional<std::uint32_t>, Rational>> branches;
  if (has_indicator_) {
    branches.emplace_back(0u, p0_);
    branches.emplace_back(1u, 1 - p0_);
  } else {
    branches.emplace_back(std::nullopt, Rational(1));
  }

  const std::uint32_t n = params_.databases;
  std::vector<Weighted<UserKey>> support;
  for (const auto& [f0, branch_probability] : branches) {
    if (branch_probability == 0) continue;
    const std::uint32_t entries = key_entries(mode_for(f0));
    const Rational weight =
        branch_probability / rational_pow(Rational(n), entries);
    std::vector<CyclicIndex> digits(entries, CyclicIndex(1, n));
    do {
      support.push_back({UserKey{f0, digits}, weight});
    } while (next_tuple(digits));
  }
  return support;
}

std::vector<Weighted<CommonRandomness>> Scheme::randomness_support() const {
  std::vector<Weighted<CommonRandomness>> support;
  if (!uses_shared_randomness()) {
    support.push_back({std::nullopt, Rational(1)});
    return support;
  }
  const Rational weight(1, params_.order);
  for (std::uint32_t v = 0; v < params_.order; ++v) {
    support.push_back({Symbol(v, params_.order), weight});
  }
  return support;
}

void Scheme::validate_key(const UserKey& key) const {
  if (has_indicator_ != key.f0.has_value()) {
    throw UsageError(has_indicator_ ? "key lacks the indicator bit"
                                    : "key carries an unexpected indicator bit");
  }
  const std::uint32_t entries = key_entries(mode_for(key.f0));
  if (key.f.size() != entries) {
    throw UsageError("key has " + std::to_string(key.f.size()) +
                     " entries, expected " + std::to_string(entries));
  }
  for (const CyclicIndex& entry : key.f) {
    if (entry.modulus() != params_.databases) {
      throw UsageError("key entry modulus differs from N");
    }
  }
}

std::vector<CyclicIndex> Scheme::retrieval_vector(
    std::uint32_t k, std::uint32_t n, std::span<const CyclicIndex> f) const {
  const std::uint32_t modulus = params_.databases;
  const CyclicIndex star = f_star(f, modulus);
  std::vector<CyclicIndex> out(f.begin(), f.begin() + (k - 1));
  out.push_back(idx_sub(CyclicIndex(n, modulus), star));
  out.insert(out.end(), f.begin() + (k - 1), f.end());
  return out;
}

std::vector<Query> Scheme::gen_queries(std::uint32_t k,
                                       const UserKey& key) const {
  if (k < 1 || k > params_.messages) {
    throw UsageError("desired index " + std::to_string(k) + " outside [1, " +
                     std::to_string(params_.messages) + "]");
  }
  validate_key(key);
  const AnswerMode mode = mode_for(key.f0);
  const std::span<const CyclicIndex> f(key.f);
  const std::size_t per_key = params_.messages - 1;

  std::vector<Query> queries;
  queries.reserve(params_.databases);
  for (std::uint32_t n = 1; n <= params_.databases; ++n) {
    Query query{key.f0, {}};
    if (instances_ == 1) {
      query.parts.push_back(retrieval_vector(k, n, f));
    } else if (mode == AnswerMode::kPlain) {
      query.parts.push_back(retrieval_vector(k, n, f.first(per_key)));
      query.parts.push_back(retrieval_vector(k, n, f.subspan(per_key)));
    } else {
      // Second sub-instance: the entrywise dual of the first, retrieval entry
      // included, so the pair never singles out position k.
      std::vector<CyclicIndex> first = retrieval_vector(k, n, f);
      std::vector<CyclicIndex> second;
      second.reserve(first.size());
      for (CyclicIndex x : first) second.push_back(dual(x));
      query.parts.push_back(std::move(first));
      query.parts.push_back(std::move(second));
    }
    queries.push_back(std::move(query));
  }
  return queries;
}

void Scheme::validate_query(const Query& query) const {
  if (has_indicator_ != query.f0.has_value()) {
    throw UsageError("query indicator bit does not match the scheme");
  }
  mode_for(query.f0);
  if (query.parts.size() != instances_) {
    throw UsageError("query has " + std::to_string(query.parts.size()) +
                     " parts, expected " + std::to_string(instances_));
  }
  for (const auto& part : query.parts) {
    if (part.size() != params_.messages) {
      throw UsageError("query part has " + std::to_string(part.size()) +
                       " entries, expected K=" +
                       std::to_string(params_.messages));
    }
    for (const CyclicIndex& entry : part) {
      if (entry.modulus() != params_.databases) {
        throw UsageError("query entry modulus differs from N");
      }
    }
  }
}

Symbol Scheme::indexed(const MessageSet& messages, std::uint32_t k,
                       std::uint32_t instance, CyclicIndex column) const {
  // Column N is the appended dummy symbol.
  if (column.is_wrap()) return Symbol::zero(params_.order);
  return messages.at(k, instance * (params_.databases - 1) + column.value());
}

bool Scheme::answers_part(AnswerMode mode,
                          std::span<const CyclicIndex> part) const {
  if (mode != AnswerMode::kPlain) return true;
  for (const CyclicIndex& entry : part) {
    if (!entry.is_wrap()) return true;
  }
  return false;
}

Answer Scheme::gen_answer(std::uint32_t n, const Query& query,
                          const MessageSet& messages,
                          const CommonRandomness& shared) const {
  if (n < 1 || n > params_.databases) {
    throw UsageError("database index " + std::to_string(n) + " outside [1, " +
                     std::to_string(params_.databases) + "]");
  }
  validate_query(query);
  if (messages.messages() != params_.messages ||
      messages.length() != length_ || messages.order() != params_.order) {
    throw UsageError("message set shape does not match the scheme");
  }
  if (shared.has_value() != uses_shared_randomness()) {
    throw UsageError(uses_shared_randomness()
                         ? "scheme needs the shared random symbol"
                         : "scheme takes no shared random symbol");
  }

  const AnswerMode mode = mode_for(query.f0);
  Symbol mask = Symbol::zero(params_.order);
  if (mode == AnswerMode::kSharedKey) {
    mask = *shared;
  } else if (mode == AnswerMode::kMessageKey) {
    std::uint64_t total = 0;
    for (std::uint32_t v : messages.raw()) total += v;
    mask = Symbol(static_cast<std::uint32_t>(total % params_.order),
                  params_.order);
  }

  Answer answer;
  for (std::uint32_t j = 0; j < instances_; ++j) {
    const auto& part = query.parts[j];
    if (!answers_part(mode, part)) continue;
    Symbol sum = mask;
    for (std::uint32_t k = 1; k <= params_.messages; ++k) {
      sum = sum + indexed(messages, k, j, part[k - 1]);
    }
    answer.symbols.push_back(sum);
  }
  return answer;
}

std::vector<Symbol> Scheme::decode(std::uint32_t k, const UserKey& key,
                                   std::span<const Answer> answers) const {
  const std::vector<Query> queries = gen_queries(k, key);
  const std::uint32_t n_db = params_.databases;
  if (answers.size() != n_db) {
    throw ProtocolError("expected " + std::to_string(n_db) + " answers, got " +
                        std::to_string(answers.size()));
  }
  const AnswerMode mode = mode_for(key.f0);

  // received[n][j]: symbol of sub-instance j from database n; an unanswered
  // part stands for the zero symbol.
  std::vector<std::vector<Symbol>> received(
      n_db, std::vector<Symbol>(instances_, Symbol::zero(params_.order)));
  for (std::uint32_t n = 0; n < n_db; ++n) {
    std::size_t next = 0;
    std::size_t expected = 0;
    for (const auto& part : queries[n].parts) {
      if (answers_part(mode, part)) ++expected;
    }
    if (answers[n].symbols.size() != expected) {
      throw ProtocolError("database " + std::to_string(n + 1) + " returned " +
                          std::to_string(answers[n].symbols.size()) +
                          " symbols, expected " + std::to_string(expected));
    }
    for (std::uint32_t j = 0; j < instances_; ++j) {
      if (!answers_part(mode, queries[n].parts[j])) continue;
      const Symbol s = answers[n].symbols[next++];
      if (s.order() != params_.order) {
        throw ProtocolError("answer symbol from another alphabet");
      }
      received[n][j] = s;
    }
  }

  std::vector<Symbol> row(length_, Symbol::zero(params_.order));
  for (std::uint32_t j = 0; j < instances_; ++j) {
    // The database asked for the dummy column returns only interference.
    std::optional<Symbol> interference;
    for (std::uint32_t n = 0; n < n_db; ++n) {
      if (queries[n].parts[j][k - 1].is_wrap()) {
        interference = received[n][j];
        break;
      }
    }
    if (!interference) throw ProtocolError("no interference answer");
    for (std::uint32_t n = 0; n < n_db; ++n) {
      const CyclicIndex column = queries[n].parts[j][k - 1];
      if (column.is_wrap()) continue;
      row[j * (n_db - 1) + column.value() - 1] =
          received[n][j] - *interference;
    }
  }
  return row;
}

Rational Scheme::key_usage(const UserKey& key) const {
  validate_key(key);
  return mode_for(key.f0) == AnswerMode::kSharedKey ? Rational(1)
                                                    : Rational(0);
}

}  // namespace pirlab
