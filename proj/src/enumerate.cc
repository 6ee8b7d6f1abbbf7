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

#include "pirlab/enumerate.h"

#include <limits>

#include "pirlab/errors.h"

namespace pirlab {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    result = saturating_mul(result, base);
  }
  return result;
}

}  // namespace

namespace encode {

void append(std::string& out, std::uint32_t value) {
  out.push_back(static_cast<char>(value & 0xff));
  out.push_back(static_cast<char>((value >> 8) & 0xff));
}

std::string symbols(std::span<const Symbol> row) {
  std::string out;
  for (const Symbol& s : row) append(out, s.value());
  return out;
}

std::string query(const Query& query) {
  std::string out;
  if (query.f0) append(out, *query.f0);
  for (const auto& part : query.parts) {
    for (const CyclicIndex& entry : part) append(out, entry.value());
  }
  return out;
}

std::string answer(const Answer& answer) {
  std::string out;
  append(out, static_cast<std::uint32_t>(answer.symbols.size()));
  for (const Symbol& s : answer.symbols) append(out, s.value());
  return out;
}

std::string messages(const MessageSet& messages, std::uint32_t skip) {
  std::string out;
  for (std::uint32_t k = 1; k <= messages.messages(); ++k) {
    if (k == skip) continue;
    for (std::uint32_t c = 1; c <= messages.length(); ++c) {
      append(out, messages.at(k, c).value());
    }
  }
  return out;
}

std::string randomness(const CommonRandomness& shared) {
  std::string out;
  append(out, shared ? 1 : 0);
  if (shared) append(out, shared->value());
  return out;
}

std::string transcript(const UserKey& key, std::span<const Query> queries,
                       std::span<const Answer> answers) {
  std::string out;
  if (key.f0) append(out, *key.f0);
  for (const CyclicIndex& entry : key.f) append(out, entry.value());
  for (std::size_t n = 0; n < queries.size(); ++n) {
    out += query(queries[n]);
    out += answer(answers[n]);
  }
  return out;
}

}  // namespace encode

std::uint64_t JointEnumerator::state_count(const Scheme& scheme) {
  const std::uint64_t symbols =
      static_cast<std::uint64_t>(scheme.messages()) * scheme.message_length();
  const std::uint64_t messages = saturating_pow(scheme.order(), symbols);
  std::uint64_t keys = 0;
  const std::uint64_t per_key = scheme.messages() - 1;
  if (scheme.has_indicator()) {
    for (std::uint32_t f0 : {0u, 1u}) {
      const Rational p = f0 == 0 ? scheme.plain_probability()
                                 : 1 - scheme.plain_probability();
      if (p == 0) continue;
      const bool doubled = scheme.instances() == 2 && f0 == 0;
      const std::uint64_t branch = saturating_pow(
          scheme.databases(), doubled ? 2 * per_key : per_key);
      keys = branch > kSaturated - keys ? kSaturated : keys + branch;
    }
  } else {
    keys = saturating_pow(scheme.databases(), per_key);
  }
  const std::uint64_t shared =
      scheme.uses_shared_randomness() ? scheme.order() : 1;
  return saturating_mul(saturating_mul(messages, keys), shared);
}

JointEnumerator::JointEnumerator(const Scheme& scheme, std::uint32_t k,
                                 std::uint64_t cap)
    : scheme_(scheme), k_(k) {
  if (k < 1 || k > scheme.messages()) {
    throw UsageError("desired index " + std::to_string(k) + " outside [1, " +
                     std::to_string(scheme.messages()) + "]");
  }
  state_count_ = state_count(scheme);
  if (state_count_ > cap) {
    throw ResourceError(
        "exhaustive audit needs " +
            (state_count_ == kSaturated ? std::string("more than 2^64")
                                        : std::to_string(state_count_)) +
            " states, above the cap of " + std::to_string(cap),
        state_count_);
  }
  message_count_ = saturating_pow(
      scheme.order(),
      static_cast<std::uint64_t>(scheme.messages()) * scheme.message_length());
  keys_ = scheme.key_support();
  randomness_ = scheme.randomness_support();
  queries_.reserve(keys_.size());
  for (const auto& key : keys_) {
    queries_.push_back(scheme.gen_queries(k, key.value));
  }
}

void JointEnumerator::visit(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(const JointState&)>& fn) const {
  const Rational message_weight = Rational(1) / Rational(message_count_);
  const std::uint32_t n_db = scheme_.databases();
  for (std::uint64_t w = begin; w < end && w < message_count_; ++w) {
    JointState state{
        MessageSet::from_index(scheme_.messages(), scheme_.message_length(),
                               scheme_.order(), w),
        {}, std::nullopt, {}, {}, {}, {}};
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      state.key = keys_[i].value;
      state.queries = queries_[i];
      for (const auto& shared : randomness_) {
        state.shared = shared.value;
        state.answers.clear();
        for (std::uint32_t n = 1; n <= n_db; ++n) {
          state.answers.push_back(scheme_.gen_answer(
              n, state.queries[n - 1], state.messages, state.shared));
        }
        state.transcript =
            encode::transcript(state.key, state.queries, state.answers);
        state.probability =
            message_weight * keys_[i].probability * shared.probability;
        fn(state);
      }
    }
  }
}

std::vector<JointState> enumerate_joint(const Scheme& scheme, std::uint32_t k,
                                        std::uint64_t cap) {
  JointEnumerator enumerator(scheme, k, cap);
  std::vector<JointState> out;
  out.reserve(enumerator.size());
  enumerator.visit(0, enumerator.message_count(),
                   [&out](const JointState& s) { out.push_back(s); });
  return out;
}

}  // namespace pirlab
