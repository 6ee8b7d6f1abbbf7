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

#ifndef PIRLAB_ERRORS_H_
#define PIRLAB_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pirlab {

// Caller passed values that violate an operation's preconditions (mismatched
// alphabets, out-of-range retrieval index, malformed query).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Scheme or tradeoff parameters outside their admissible region.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Answers that cannot have come from the scheme's own answer generator.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration would exceed the configured state cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace pirlab

#endif  // PIRLAB_ERRORS_H_
