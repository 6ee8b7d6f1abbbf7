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

// Command-line front end for the pirlab audit library.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pirlab/commands.h"
#include "pirlab/errors.h"
#include "pirlab/schemes.h"

namespace {

struct Flags {
  std::string scheme = "tsc";
  std::uint32_t databases = 2;
  std::uint32_t messages = 2;
  std::uint32_t order = 2;
  std::string budget;
  std::string grid;
  std::optional<std::uint64_t> cap;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
  bool clamp = false;
  bool inject_fault = false;
};

void add_scheme_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("-s,--scheme", f.scheme,
                  "tsc, spir, wspir, mixed-total or mixed-individual")
      ->required();
  cmd->add_option("-N,--n,--databases", f.databases, "number of databases");
  cmd->add_option("-K,--k,--messages", f.messages, "number of messages");
  cmd->add_option("-q,--q,--order", f.order, "alphabet size");
  cmd->add_flag("--clamp-budget", f.clamp,
                "lower a budget above the threshold to the threshold");
}

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--cap", f.cap, "joint state cap (default: $PIR_LAB_CAP or 1e8)");
  cmd->add_option("-j,--threads", f.threads, "worker threads, 0 = all cores");
  cmd->add_option("-o,--out", f.out, "output path, default standard output");
}

pirlab::RunConfig make_config(const Flags& f) {
  pirlab::RunConfig config;
  config.scheme = pirlab::parse_scheme_id(f.scheme);
  config.databases = f.databases;
  config.messages = f.messages;
  config.order = f.order;
  if (!f.budget.empty()) config.budget = pirlab::parse_rational(f.budget);
  config.clamp_budget = f.clamp;
  config.cap = pirlab::resolve_cap(f.cap);
  config.threads = f.threads;
  config.out = f.out;
  config.format = pirlab::parse_format(f.format);
  return config;
}

int finish(const pirlab::CommandResult& result, const std::string& out) {
  if (!result.message.empty()) std::cerr << "pirlab: " << result.message << "\n";
  if (!result.body.empty()) {
    try {
      pirlab::write_output(out, result.body);
    } catch (const pirlab::ParameterError& e) {
      std::cerr << "pirlab: " << e.what() << "\n";
      return pirlab::kExitParameter;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact audits of leaky private information retrieval schemes"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* audit = app.add_subcommand("audit", "audit one scheme exhaustively");
  add_scheme_flags(audit, f);
  add_run_flags(audit, f);
  audit->add_option("-b,--budget", f.budget, "leakage budget p/q (mixed schemes)");
  audit->add_option("-f,--format", f.format, "json or csv");

  CLI::App* sweep = app.add_subcommand("sweep", "audit a mixed scheme over a budget grid");
  add_scheme_flags(sweep, f);
  add_run_flags(sweep, f);
  sweep->add_option("-g,--grid", f.grid, "comma-separated budgets, e.g. 0,1/8,1/4");

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
  add_run_flags(verify, f);
  verify->add_flag("--inject-fault", f.inject_fault,
                   "halve every mixed scheme's indicator budget")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pirlab::kExitParameter;
  }

  try {
    if (verify->parsed()) {
      pirlab::AcceptanceOptions options;
      options.cap = pirlab::resolve_cap(f.cap);
      options.threads = f.threads;
      options.inject_f0_fault = f.inject_fault;
      return finish(pirlab::cmd_verify(options), f.out);
    }
    if (sweep->parsed()) {
      f.format = "csv";
      const pirlab::RunConfig config = make_config(f);
      return finish(pirlab::cmd_sweep(config, pirlab::parse_grid(f.grid)), f.out);
    }
    return finish(pirlab::cmd_audit(make_config(f)), f.out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "pirlab: " << e.what() << "\n";
    return pirlab::kExitParameter;
  }
}
