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

#ifndef PIRLAB_REPORT_H_
#define PIRLAB_REPORT_H_

#include <string>

#include "json.hpp"
#include "pirlab/audit.h"

namespace pirlab {

// Audit report as JSON. Rationals are "num/den" strings; reals are rounded to
// 12 significant digits. Keys are sorted, so parsing and re-serializing a
// report reproduces it byte for byte.
nlohmann::json report_to_json(const AuditReport& report);
std::string dump_report(const nlohmann::json& report);

inline constexpr const char* kSweepHeader =
    "budget,D_achieved,D_theory,leak_achieved,leak_budget,rho_achieved,"
    "rho_theory";

// One data row (no trailing newline) in the sweep column order.
std::string sweep_row(const AuditReport& report);

}  // namespace pirlab

#endif  // PIRLAB_REPORT_H_
