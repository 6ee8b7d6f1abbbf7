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

#ifndef PIRLAB_COMMANDS_H_
#define PIRLAB_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pirlab/acceptance.h"
#include "pirlab/enumerate.h"
#include "pirlab/rational.h"
#include "pirlab/schemes.h"

namespace pirlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParameter = 2,
  kExitResource = 3,
};

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  SchemeId scheme = SchemeId::kTsc;
  std::uint32_t databases = 2;
  std::uint32_t messages = 2;
  std::uint32_t order = 2;
  std::optional<Rational> budget;
  // Lower a budget above its threshold to the threshold instead of rejecting.
  bool clamp_budget = false;
  std::uint64_t cap = kDefaultStateCap;
  unsigned threads = 0;
  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::kJson;
};

// Output of one command: `body` goes to the output file (or stdout), `message`
// to stderr.
struct CommandResult {
  int exit_code = kExitOk;
  std::string body;
  std::string message;
};

OutputFormat parse_format(std::string_view name);

// Comma-separated "p/q" list; the empty string is the empty grid.
std::vector<Rational> parse_grid(std::string_view text);

// State cap: `flag` when given, else PIR_LAB_CAP, else the default.
std::uint64_t resolve_cap(std::optional<std::uint64_t> flag);

// Validates the configuration against the scheme rules (clamping when asked)
// and builds the scheme. Throws ParameterError.
Scheme build_scheme(const RunConfig& config);

CommandResult cmd_audit(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config,
                        const std::vector<Rational>& grid);
CommandResult cmd_verify(const AcceptanceOptions& options);

// Writes `body` to `path`, or to standard output when `path` is empty.
void write_output(const std::string& path, const std::string& body);

}  // namespace pirlab

#endif  // PIRLAB_COMMANDS_H_
