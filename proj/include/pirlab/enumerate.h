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

#ifndef PIRLAB_ENUMERATE_H_
#define PIRLAB_ENUMERATE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pirlab/rational.h"
#include "pirlab/schemes.h"

namespace pirlab {

inline constexpr std::uint64_t kDefaultStateCap = 100'000'000;

// Canonical byte encodings. Every integer component is an unsigned 16-bit
// little-endian value.
namespace encode {

void append(std::string& out, std::uint32_t value);
std::string symbols(std::span<const Symbol> row);
std::string query(const Query& query);
std::string answer(const Answer& answer);
// Rows of every message except `skip` (0 keeps all of them).
std::string messages(const MessageSet& messages, std::uint32_t skip = 0);
std::string randomness(const CommonRandomness& shared);

// The user's full view: f0 (if present), key entries, then per database the
// query entries, answer length and answer symbols.
std::string transcript(const UserKey& key, std::span<const Query> queries,
                       std::span<const Answer> answers);

}  // namespace encode

// One point of the product distribution over (W, F, S) with the resulting
// transcript for a fixed desired index.
struct JointState {
  MessageSet messages;
  UserKey key;
  CommonRandomness shared;
  std::vector<Query> queries;
  std::vector<Answer> answers;
  std::string transcript;
  Rational probability;
};

// Walks the support of (W, F, S) in lexicographic order: messages, then user
// keys, then shared randomness.
class JointEnumerator {
 public:
  // Throws ResourceError when the state count exceeds `cap`.
  JointEnumerator(const Scheme& scheme, std::uint32_t k,
                  std::uint64_t cap = kDefaultStateCap);

  // q^{KL} |key support| |randomness support|, saturating at UINT64_MAX.
  static std::uint64_t state_count(const Scheme& scheme);

  std::uint64_t message_count() const { return message_count_; }
  std::uint64_t size() const { return state_count_; }

  // Visits every state whose message index lies in [begin, end).
  void visit(std::uint64_t begin, std::uint64_t end,
             const std::function<void(const JointState&)>& fn) const;

 private:
  const Scheme& scheme_;
  std::uint32_t k_;
  std::uint64_t message_count_ = 0;
  std::uint64_t state_count_ = 0;
  std::vector<Weighted<UserKey>> keys_;
  std::vector<Weighted<CommonRandomness>> randomness_;
  std::vector<std::vector<Query>> queries_;  // per key
};

// Materializes the whole support; meant for small instances and tests.
std::vector<JointState> enumerate_joint(const Scheme& scheme, std::uint32_t k,
                                        std::uint64_t cap = kDefaultStateCap);

}  // namespace pirlab

#endif  // PIRLAB_ENUMERATE_H_
