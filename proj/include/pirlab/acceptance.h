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

#ifndef PIRLAB_ACCEPTANCE_H_
#define PIRLAB_ACCEPTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pirlab/enumerate.h"

namespace pirlab {

struct AcceptanceOptions {
  std::uint64_t cap = kDefaultStateCap;
  unsigned threads = 0;
  // Builds every mixed scheme with half the nominal indicator budget while
  // checking against the nominal theory. The leakage criteria must then fail.
  bool inject_f0_fault = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

// Runs the ten end-to-end criteria in order. Throws ResourceError when an
// audit would exceed the cap.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "PASS  3  WS-PIR all three cases" (details indented on following lines).
std::string format_criterion(const CriterionResult& result, bool verbose);

}  // namespace pirlab

#endif  // PIRLAB_ACCEPTANCE_H_
