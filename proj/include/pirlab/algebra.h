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

#ifndef PIRLAB_ALGEBRA_H_
#define PIRLAB_ALGEBRA_H_

#include <cstdint>
#include <span>

namespace pirlab {

// Largest group order or index modulus. Transcripts encode every component as
// an unsigned 16-bit value.
inline constexpr std::uint32_t kMaxOrder = 65535;

// The symbol alphabet: integers mod q. Answers use the same alphabet as the
// messages, so download cost counts symbols.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t order);

  std::uint32_t order() const { return order_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t order_;
};

// An element of the cyclic group of order q.
class Symbol {
 public:
  Symbol(std::uint32_t value, std::uint32_t order);

  static Symbol zero(std::uint32_t order) { return Symbol(0, order); }

  std::uint32_t value() const { return value_; }
  std::uint32_t order() const { return order_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t order_;
};

// Group addition and subtraction. Both throw UsageError when the operands come
// from different alphabets.
Symbol sym_add(Symbol a, Symbol b);
Symbol sym_sub(Symbol a, Symbol b);

inline Symbol operator+(Symbol a, Symbol b) { return sym_add(a, b); }
inline Symbol operator-(Symbol a, Symbol b) { return sym_sub(a, b); }

// 1-indexed residue in [1, N]. N plays the role of zero.
class CyclicIndex {
 public:
  CyclicIndex(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_wrap() const { return value_ == modulus_; }

  friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

// (x+y)_N: x+y when that stays within N, otherwise x+y-N.
CyclicIndex idx_add(CyclicIndex x, CyclicIndex y);
// (x-y)_N: x-y when positive, otherwise x-y+N.
CyclicIndex idx_sub(CyclicIndex x, CyclicIndex y);

// Cyclic sum of the user's key entries, the database whose answer carries only
// interference. An empty list sums to N.
CyclicIndex f_star(std::span<const CyclicIndex> f, std::uint32_t modulus);

}  // namespace pirlab

#endif  // PIRLAB_ALGEBRA_H_
