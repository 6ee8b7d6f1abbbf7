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

#include "pirlab/distribution.h"

#include <cmath>

#include "pirlab/errors.h"

namespace pirlab {

void ExactDist::add(const std::string& key, const Rational& weight) {
  if (weight < 0) throw UsageError("negative probability weight");
  if (weight == 0) return;
  auto [it, inserted] = weights_.try_emplace(key, weight);
  if (!inserted) it->second += weight;
}

void ExactDist::merge(const ExactDist& other) {
  for (const auto& [key, weight] : other.weights_) add(key, weight);
}

Rational ExactDist::total() const {
  Rational sum = 0;
  for (const auto& [key, weight] : weights_) sum += weight;
  return sum;
}

void JointDist::add(const std::string& x, const std::string& t,
                    const Rational& weight) {
  if (weight < 0) throw UsageError("negative probability weight");
  if (weight == 0) return;
  auto [it, inserted] = weights_.try_emplace(Key(x, t), weight);
  if (!inserted) it->second += weight;
}

void JointDist::merge(const JointDist& other) {
  for (const auto& [key, weight] : other.weights_) {
    add(key.first, key.second, weight);
  }
}

ExactDist JointDist::marginal_x() const {
  ExactDist out;
  for (const auto& [key, weight] : weights_) out.add(key.first, weight);
  return out;
}

ExactDist JointDist::marginal_t() const {
  ExactDist out;
  for (const auto& [key, weight] : weights_) out.add(key.second, weight);
  return out;
}

Rational JointDist::total() const {
  Rational sum = 0;
  for (const auto& [key, weight] : weights_) sum += weight;
  return sum;
}

double entropy(const ExactDist& dist, std::uint32_t base) {
  if (base < 2) throw UsageError("entropy base must be at least 2");
  const double log_base = std::log(static_cast<double>(base));
  double h = 0.0;
  for (const auto& [key, weight] : dist.weights()) {
    const double p = to_double(weight);
    h -= p * std::log(p) / log_base;
  }
  return h == 0.0 ? 0.0 : h;  // no -0.0
}

double mutual_information(const JointDist& joint, std::uint32_t base) {
  if (base < 2) throw UsageError("entropy base must be at least 2");
  const ExactDist px = joint.marginal_x();
  const ExactDist pt = joint.marginal_t();
  const double log_base = std::log(static_cast<double>(base));
  double mi = 0.0;
  for (const auto& [key, weight] : joint.weights()) {
    const Rational ratio =
        weight / (px.weights().at(key.first) * pt.weights().at(key.second));
    if (ratio == 1) continue;
    mi += to_double(weight) * std::log(to_double(ratio)) / log_base;
  }
  return mi > 0.0 ? mi : 0.0;
}

}  // namespace pirlab
