// Copyright 2026 The stosszahl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stosszahl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>

#include "stosszahl/common.hpp"
#include "stosszahl/experiment.hpp"

namespace stosszahl::cli {

namespace {

namespace ex = stosszahl::experiment;

void print_report(const ex::RunReport& report, const ex::ScenarioConfig& config, bool json,
                  std::ostream& out) {
  if (json) {
    out << report.to_json() << '\n';
    return;
  }
  out << "scenario " << report.scenario << " (" << report.schema_version << ")\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << format_real(c.measured) << ' '
        << c.comparison << ' ' << format_real(c.threshold) << '\n';
  }
  if (!config.output_dir.empty()) {
    out << "outputs in " << config.output_dir.string() << '\n';
  }
  out << (report.passed() ? "all checks passed" : "some checks failed") << '\n';
}

int execute(const ex::ScenarioConfig& config, bool json, std::ostream& out) {
  const ex::RunReport report = ex::run_scenario(config);
  print_report(report, config, json, out);
  return report.passed() ? kPass : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"stosszahl: unitary versus collapse-augmented evolution experiments", "stosszahl"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  bool no_timestamp = false;
  bool json = false;
  auto* run_cmd = app.add_subcommand("run", "run a scenario from a config file");
  run_cmd->add_option("--config", config_path, "scenario config file")->required();
  run_cmd->add_option("--seed", seed, "override the configured seed");
  run_cmd->add_option("--out", out_dir, "output directory (overrides config and environment)");
  run_cmd->add_flag("--no-header-timestamp", no_timestamp, "omit the timestamp line in outputs");
  run_cmd->add_flag("--json", json, "print the report as JSON");

  std::string ledger_path;
  std::optional<std::uint64_t> molecules;
  std::optional<std::uint64_t> initial_excited;
  auto* audit_cmd = app.add_subcommand("audit", "audit a transaction ledger CSV");
  audit_cmd->add_option("--ledger", ledger_path, "ledger CSV")->required();
  audit_cmd->add_option("--molecules", molecules, "molecule count, enables full replay");
  audit_cmd->add_option("--initial-excited", initial_excited,
                        "initially excited molecules (ids 0..n-1)")
      ->needs("--molecules");
  audit_cmd->add_option("--out", out_dir, "output directory");
  audit_cmd->add_flag("--no-header-timestamp", no_timestamp, "omit the timestamp line in outputs");
  audit_cmd->add_flag("--json", json, "print the report as JSON");

  auto* list_cmd = app.add_subcommand("list-scenarios", "list registered scenarios and checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& s : ex::registered_scenarios()) {
        out << s.name << "  [" << s.schema_version() << "]  " << s.summary << '\n';
        for (const auto& c : s.checks) out << "    " << c << '\n';
      }
      return kPass;
    }

    ex::ConfigOverrides overrides;
    overrides.seed = seed;
    if (out_dir) overrides.output_dir = std::filesystem::path(*out_dir);
    overrides.no_header_timestamp = no_timestamp;

    if (run_cmd->parsed()) {
      return execute(ex::load_scenario_config(config_path, overrides), json, out);
    }

    ex::ScenarioConfig config;
    config.scenario = "ledger-audit";
    config.seed = 0;
    config.header_timestamp = !no_timestamp;
    if (out_dir) {
      config.output_dir = *out_dir;
    } else if (const char* env = std::getenv(ex::kOutputDirEnv); env != nullptr && *env != '\0') {
      config.output_dir = env;
    }
    config.parameters.set("audit", "ledger", ledger_path);
    if (molecules) config.parameters.set("audit", "molecules", std::to_string(*molecules));
    if (initial_excited) {
      config.parameters.set("audit", "initial_excited", std::to_string(*initial_excited));
    }
    return execute(config, json, out);
  } catch (const ex::ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace stosszahl::cli
