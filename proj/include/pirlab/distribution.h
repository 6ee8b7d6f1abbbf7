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

#ifndef PIRLAB_DISTRIBUTION_H_
#define PIRLAB_DISTRIBUTION_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pirlab/rational.h"

namespace pirlab {

// Finite distribution with exact weights over canonical byte keys. Weights
// accumulate; zero-weight additions are ignored so every stored weight is
// positive.
class ExactDist {
 public:
  using Map = std::map<std::string, Rational>;

  void add(const std::string& key, const Rational& weight);
  void merge(const ExactDist& other);

  Rational total() const;
  bool normalized() const { return total() == 1; }
  std::size_t size() const { return weights_.size(); }
  const Map& weights() const { return weights_; }

  friend bool operator==(const ExactDist&, const ExactDist&) = default;

 private:
  Map weights_;
};

// Exact joint distribution of a pair (X, T) of byte keys.
class JointDist {
 public:
  using Key = std::pair<std::string, std::string>;
  using Map = std::map<Key, Rational>;

  void add(const std::string& x, const std::string& t, const Rational& weight);
  void merge(const JointDist& other);

  ExactDist marginal_x() const;
  ExactDist marginal_t() const;
  Rational total() const;
  const Map& weights() const { return weights_; }

 private:
  Map weights_;
};

// Shannon entropy in base-`base` units.
double entropy(const ExactDist& dist, std::uint32_t base);

// I(X;T) = H(X) + H(T) - H(X,T) in base-`base` units. Each term is evaluated
// as p(x,t) log p(x,t)/(p(x)p(t)) with the ratio formed exactly, so
// independent pairs contribute exactly zero. Float noise below zero is
// clamped.
double mutual_information(const JointDist& joint, std::uint32_t base);

}  // namespace pirlab

#endif  // PIRLAB_DISTRIBUTION_H_
