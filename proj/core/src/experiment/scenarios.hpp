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

#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>

#include "stosszahl/experiment.hpp"

namespace stosszahl::experiment::detail {

/// Owns the scenario's output directory. Every file starts with a
/// timestamped comment line unless timestamps are disabled.
class OutputSink {
 public:
  explicit OutputSink(const ScenarioConfig& config);

  bool enabled() const noexcept { return !dir_.empty(); }
  const std::optional<std::string>& timestamp() const noexcept { return timestamp_; }
  /// Writes `name` into the output directory and records it in the manifest.
  /// No-op when the sink is disabled.
  void write(const std::string& name, const std::function<void(std::ostream&)>& body);
  const std::vector<std::string>& manifest() const noexcept { return manifest_; }

 private:
  std::filesystem::path dir_;
  std::string scenario_;
  std::optional<std::string> timestamp_;
  std::vector<std::string> manifest_;
};

class ReportBuilder {
 public:
  ReportBuilder(const ScenarioConfig& config);

  void param(const std::string& name, const std::string& value);
  void param(const std::string& name, double value);
  void at_most(const std::string& name, double measured, double threshold,
               std::string detail = {});
  void at_least(const std::string& name, double measured, double threshold,
                std::string detail = {});
  void equals(const std::string& name, double measured, double expected, std::string detail = {});

  /// Verifies that the checks match the registered list exactly once each.
  RunReport finish(const OutputSink& sink);

 private:
  const ScenarioInfo& info_;
  RunReport report_;
};

/// Rejects sections other than [scenario] and the listed ones.
void require_sections(const ScenarioConfig& config, std::initializer_list<std::string_view> allowed);

std::string join(const std::vector<double>& values);

RunReport run_two_state(const ScenarioConfig& config);
RunReport run_unitary_collapse(const ScenarioConfig& config);
RunReport run_born(const ScenarioConfig& config);
RunReport run_gas(const ScenarioConfig& config);
RunReport run_audit(const ScenarioConfig& config);

}  // namespace stosszahl::experiment::detail
