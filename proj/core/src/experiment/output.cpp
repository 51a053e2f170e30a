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

#include <chrono>
#include <ctime>
#include <fstream>

#include "scenarios.hpp"
#include "stosszahl/common.hpp"

namespace stosszahl::experiment::detail {

namespace {
std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}
}  // namespace

OutputSink::OutputSink(const ScenarioConfig& config)
    : dir_(config.output_dir), scenario_(config.scenario) {
  if (config.header_timestamp) timestamp_ = utc_now();
  if (enabled()) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw ConfigError("scenario.output_dir", "cannot create " + dir_.string());
  }
}

void OutputSink::write(const std::string& name, const std::function<void(std::ostream&)>& body) {
  if (!enabled()) return;
  const auto path = dir_ / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  if (timestamp_) out << "# stosszahl " << scenario_ << " generated " << *timestamp_ << '\n';
  body(out);
  if (!out) throw std::runtime_error("error writing " + path.string());
  manifest_.push_back(name);
}

ReportBuilder::ReportBuilder(const ScenarioConfig& config)
    : info_([&]() -> const ScenarioInfo& {
        const ScenarioInfo* info = find_scenario(config.scenario);
        if (info == nullptr) throw ConfigError("scenario.name", "unknown scenario");
        return *info;
      }()) {
  report_.scenario = info_.name;
  report_.schema_version = info_.schema_version();
  param("seed", std::to_string(config.seed));
}

void ReportBuilder::param(const std::string& name, const std::string& value) {
  report_.parameters.emplace_back(name, value);
}

void ReportBuilder::param(const std::string& name, double value) {
  param(name, format_real(value));
}

void ReportBuilder::at_most(const std::string& name, double measured, double threshold,
                            std::string detail) {
  report_.checks.push_back({name, measured <= threshold, measured, threshold, "<=",
                            std::move(detail)});
}

void ReportBuilder::at_least(const std::string& name, double measured, double threshold,
                             std::string detail) {
  report_.checks.push_back({name, measured >= threshold, measured, threshold, ">=",
                            std::move(detail)});
}

void ReportBuilder::equals(const std::string& name, double measured, double expected,
                           std::string detail) {
  report_.checks.push_back({name, measured == expected, measured, expected, "==",
                            std::move(detail)});
}

RunReport ReportBuilder::finish(const OutputSink& sink) {
  if (report_.checks.size() != info_.checks.size()) {
    throw std::logic_error("scenario " + info_.name + " produced " +
                           std::to_string(report_.checks.size()) + " checks, registry lists " +
                           std::to_string(info_.checks.size()));
  }
  for (std::size_t i = 0; i < info_.checks.size(); ++i) {
    if (report_.checks[i].name != info_.checks[i]) {
      throw std::logic_error("scenario " + info_.name + ": check '" + report_.checks[i].name +
                             "' does not match registered '" + info_.checks[i] + "'");
    }
  }
  report_.outputs = sink.manifest();
  report_.generated_at = sink.timestamp();
  return report_;
}

void require_sections(const ScenarioConfig& config,
                      std::initializer_list<std::string_view> allowed) {
  for (const auto& name : config.parameters.section_names()) {
    if (name == "scenario") continue;
    bool ok = false;
    for (auto a : allowed) ok = ok || name == a;
    if (!ok) {
      throw ConfigError(name, "section is not used by scenario '" + config.scenario + "'");
    }
  }
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += format_real(values[i]);
  }
  return out;
}

}  // namespace stosszahl::experiment::detail
