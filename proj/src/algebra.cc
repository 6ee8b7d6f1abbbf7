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

#include "pirlab/algebra.h"

#include <string>

#include "pirlab/errors.h"

namespace pirlab {
namespace {

void require_same_order(Symbol a, Symbol b) {
  if (a.order() != b.order()) {
    throw UsageError("symbols from different alphabets: q=" +
                     std::to_string(a.order()) + " vs q=" +
                     std::to_string(b.order()));
  }
}

void require_same_modulus(CyclicIndex x, CyclicIndex y) {
  if (x.modulus() != y.modulus()) {
    throw UsageError("cyclic indices with different moduli: N=" +
                     std::to_string(x.modulus()) + " vs N=" +
                     std::to_string(y.modulus()));
  }
}

}  // namespace

Alphabet::Alphabet(std::uint32_t order) : order_(order) {
  if (order < 2 || order > kMaxOrder) {
    throw ParameterError("alphabet order must be in [2, 65535], got " +
                         std::to_string(order));
  }
}

Symbol::Symbol(std::uint32_t value, std::uint32_t order)
    : value_(value), order_(Alphabet(order).order()) {
  if (value >= order) {
    throw UsageError("symbol " + std::to_string(value) +
                     " outside alphabet of order " + std::to_string(order));
  }
}

Symbol sym_add(Symbol a, Symbol b) {
  require_same_order(a, b);
  return Symbol((a.value() + b.value()) % a.order(), a.order());
}

Symbol sym_sub(Symbol a, Symbol b) {
  require_same_order(a, b);
  return Symbol((a.value() + a.order() - b.value()) % a.order(), a.order());
}

CyclicIndex::CyclicIndex(std::uint32_t value, std::uint32_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus < 1 || modulus > kMaxOrder) {
    throw UsageError("index modulus must be in [1, 65535], got " +
                     std::to_string(modulus));
  }
  if (value < 1 || value > modulus) {
    throw UsageError("cyclic index " + std::to_string(value) +
                     " outside [1, " + std::to_string(modulus) + "]");
  }
}

CyclicIndex idx_add(CyclicIndex x, CyclicIndex y) {
  require_same_modulus(x, y);
  const std::uint32_t n = x.modulus();
  const std::uint32_t sum = x.value() + y.value();
  return CyclicIndex(sum <= n ? sum : sum - n, n);
}

CyclicIndex idx_sub(CyclicIndex x, CyclicIndex y) {
  require_same_modulus(x, y);
  const std::uint32_t n = x.modulus();
  return CyclicIndex(x.value() > y.value() ? x.value() - y.value()
                                           : x.value() + n - y.value(),
                     n);
}

CyclicIndex f_star(std::span<const CyclicIndex> f, std::uint32_t modulus) {
  CyclicIndex sum(modulus, modulus);
  for (const CyclicIndex& entry : f) sum = idx_add(sum, entry);
  return sum;
}

}  // namespace pirlab
