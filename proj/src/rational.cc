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

#include "pirlab/rational.h"

#include <cstdio>
#include <string>

#include "pirlab/errors.h"

namespace pirlab {
namespace {

using boost::multiprecision::cpp_int;

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

cpp_int parse_integer(std::string_view text, std::string_view whole) {
  if (!is_integer_literal(text)) {
    throw ParameterError("not a rational literal: '" + std::string(whole) +
                         "' (expected p/q)");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return cpp_int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const cpp_int num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw ParameterError("denominator must be positive: '" + std::string(text) +
                         "'");
  }
  const cpp_int den = parse_integer(den_text, text);
  if (den == 0) {
    throw ParameterError("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_fraction_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational geometric_sum(const Rational& ratio, unsigned count) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i < count; ++i) {
    sum += term;
    term *= ratio;
  }
  return sum;
}

std::string format_decimal(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string format_decimal(const Rational& value) {
  return format_decimal(to_double(value));
}

double round_significant(double value) {
  return std::stod(format_decimal(value));
}

}  // namespace pirlab
