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
#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::experiment::detail {

RunReport run_audit(const ScenarioConfig& config) {
  require_sections(config, {"audit"});
  const SectionReader s(config.parameters, "audit");
  const std::string ledger_name = s.text("ledger");
  const auto molecules = s.optional_count("molecules");
  const auto initial_excited = s.optional_count("initial_excited");
  config.parameters.reject_unused();
  if (initial_excited && !molecules) {
    throw ConfigError(s.path("initial_excited"), "requires audit.molecules");
  }

  const std::filesystem::path ledger_path = config.base_dir / ledger_name;
  std::ifstream in(ledger_path);
  if (!in) throw ConfigError(s.path("ledger"), "cannot open " + ledger_path.string());
  std::vector<gas::TransactionEvent> events;
  try {
    events = gas::read_ledger_csv(in);
  } catch (const InvalidArgument& e) {
    throw ConfigError(s.path("ledger"), e.what());
  }

  std::optional<gas::GasState> initial;
  if (molecules) {
    gas::GasConfig g;
    g.molecules = *molecules;
    g.initial_excited = initial_excited.value_or(0);
    try {
      initial = gas::init_gas(g);
    } catch (const InvalidArgument& e) {
      throw ConfigError("audit", e.what());
    }
  }
  const gas::AuditReport audit = gas::audit_ledger(events, initial);

  ReportBuilder report(config);
  report.param("ledger", ledger_path.string());
  report.param("events", static_cast<double>(audit.events));
  report.param("initial_state", initial ? std::string("replayed") : std::string("inferred"));
  report.at_most("ordering_violations", static_cast<double>(audit.ordering_violations), 0.0,
                 "events with t_e >= t_a or decreasing t_e");
  report.at_most("precondition_violations", static_cast<double>(audit.precondition_violations),
                 0.0, "emitters not excited or absorbers not in the ground state");
  report.at_most("record_violations", static_cast<double>(audit.record_violations), 0.0,
                 "self-transfers, weights outside (0, 1], empty confirmation sets, bad ids");
  report.at_most("conservation_violations", static_cast<double>(audit.conservation_violations),
                 0.0,
                 initial ? "quanta count drift during replay"
                         : "not evaluated without an initial state; see precondition_violations");

  OutputSink sink(config);
  sink.write("audit_violations.csv", [&](std::ostream& out) {
    out << "event_index,kind,detail\n";
    for (const auto& v : audit.violations) {
      out << v.event_index << ',' << v.kind << ",\"" << v.detail << "\"\n";
    }
  });
  return report.finish(sink);
}

}  // namespace stosszahl::experiment::detail
