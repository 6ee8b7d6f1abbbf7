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

#ifndef PIRLAB_RATIONAL_H_
#define PIRLAB_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pirlab {

// Arbitrary-precision exact rational. Every probability weight and every
// closed-form tradeoff value in the library is one of these.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Rejects zero denominators and any
// decimal notation; throws ParameterError.
Rational parse_rational(std::string_view text);

// Always "num/den" in lowest terms, even for integers ("2/1").
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

// base^exponent for a non-negative exponent.
Rational rational_pow(const Rational& base, unsigned exponent);

// 1 + x + x^2 + ... + x^count-1.
Rational geometric_sum(const Rational& ratio, unsigned count);

// Decimal rendering with 12 significant digits.
std::string format_decimal(double value);
std::string format_decimal(const Rational& value);

// Rounds to the value that format_decimal would print.
double round_significant(double value);

}  // namespace pirlab

#endif  // PIRLAB_RATIONAL_H_
