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

#include <fstream>

#include "scenarios.hpp"

namespace stosszahl::experiment {

std::string ScenarioInfo::schema_version() const {
  return "stosszahl.report/" + name + "/v" + std::to_string(version);
}

// Bump `version` whenever a scenario's check list changes.
const std::vector<ScenarioInfo>& registered_scenarios() {
  static const std::vector<ScenarioInfo> scenarios = {
      {"two-state-relaxation",
       "two-state master equation versus its closed-form relaxation",
       1,
       {"closed_form_max_error", "equilibrium_error", "probability_conservation",
        "kl_non_increasing"}},
      {"unitary-vs-collapse",
       "entropy under unitary evolution with and without interleaved measurement transitions",
       1,
       {"unitary_entropy_drift", "collapse_entropy_final", "collapse_entropy_bounded"}},
      {"born-statistics",
       "chi-square test of collapse sampling against Born weights",
       1,
       {"chi_square", "zero_weight_outcomes", "seed_reproducibility"}},
      {"gas-equilibrium",
       "emitter/absorber gas relaxation, ledger audit and master-equation cross-check",
       1,
       {"ledger_audit", "mean_k_equilibrium", "macro_entropy_near_max", "event_density",
        "master_equation_crosscheck"}},
      {"ledger-audit",
       "replays a transaction ledger against ordering and conservation invariants",
       1,
       {"ordering_violations", "precondition_violations", "record_violations",
        "conservation_violations"}},
  };
  return scenarios;
}

const ScenarioInfo* find_scenario(std::string_view name) {
  for (const auto& s : registered_scenarios()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

RunReport run_scenario(const ScenarioConfig& config) {
  if (find_scenario(config.scenario) == nullptr) {
    throw ConfigError("scenario.name", "unknown scenario '" + config.scenario + "'");
  }
  RunReport report;
  if (config.scenario == "two-state-relaxation") {
    report = detail::run_two_state(config);
  } else if (config.scenario == "unitary-vs-collapse") {
    report = detail::run_unitary_collapse(config);
  } else if (config.scenario == "born-statistics") {
    report = detail::run_born(config);
  } else if (config.scenario == "gas-equilibrium") {
    report = detail::run_gas(config);
  } else {
    report = detail::run_audit(config);
  }
  if (!config.output_dir.empty()) {
    std::ofstream out(config.output_dir / "report.json", std::ios::binary);
    out << report.to_json();
  }
  return report;
}

}  // namespace stosszahl::experiment
