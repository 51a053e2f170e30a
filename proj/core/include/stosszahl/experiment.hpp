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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stosszahl::experiment {

/// Malformed or inconsistent configuration. `field()` is the dotted path of
/// the offending entry ("gas.molecules"), or the section/file when no single
/// key is at fault.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Flat `key = value` text with `[section]` headers. '#' and ';' start
/// comments. Keys must be unique within a section.
///
/// Every key must be consumed by the scenario that reads it; `reject_unused`
/// turns leftovers into a ConfigError so that typos never pass silently.
class ConfigDocument {
 public:
  struct Entry {
    std::string value;
    std::size_t line = 0;
    mutable bool used = false;
  };
  using Section = std::map<std::string, Entry, std::less<>>;

  static ConfigDocument parse(std::istream& in, const std::string& source = "<config>");

  bool has_section(std::string_view name) const;
  const Section* section(std::string_view name) const;
  std::vector<std::string> section_names() const;
  /// Programmatic construction (tests, CLI shortcuts).
  void set(const std::string& section, const std::string& key, std::string value);

  void reject_unused() const;
  const std::string& source() const noexcept { return source_; }

 private:
  std::string source_;
  std::map<std::string, Section, std::less<>> sections_;
};

/// Typed view of one config section; every accessor marks its key as used.
class SectionReader {
 public:
  SectionReader(const ConfigDocument& doc, std::string section);

  bool has(std::string_view key) const;
  std::string text(std::string_view key, std::optional<std::string> fallback = {}) const;
  double real(std::string_view key, std::optional<double> fallback = {}) const;
  std::uint64_t count(std::string_view key, std::optional<std::uint64_t> fallback = {}) const;
  /// Comma-separated reals; "a/b" fractions are accepted.
  std::vector<double> reals(std::string_view key,
                            std::optional<std::vector<double>> fallback = {}) const;
  std::optional<std::string> optional_text(std::string_view key) const;
  std::optional<double> optional_real(std::string_view key) const;
  std::optional<std::uint64_t> optional_count(std::string_view key) const;

  std::string path(std::string_view key) const { return section_ + "." + std::string(key); }

 private:
  const ConfigDocument::Entry* find(std::string_view key) const;

  const ConfigDocument& doc_;
  std::string section_;
};

/// Parses a sample-time grid: either "start:stop:count" (count evenly spaced
/// points, both ends included) or a comma-separated list. Times must be
/// finite, >= 0 and strictly increasing.
std::vector<double> parse_time_grid(std::string_view text, const std::string& field);

struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir;  // empty: write nothing
  std::filesystem::path base_dir;    // relative input paths resolve here
  std::vector<double> sample_times;  // empty: scenario default
  bool header_timestamp = true;
  ConfigDocument parameters;
};

struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> output_dir;
  bool no_header_timestamp = false;
};

/// Environment variable that overrides the configured output directory.
/// An explicit --out still wins.
inline constexpr const char* kOutputDirEnv = "STOSSZAHL_OUTPUT_DIR";

/// Reads the [scenario] block (name, seed, output_dir, sample_times,
/// header_timestamp) and keeps the remaining sections for the scenario.
ScenarioConfig parse_scenario_config(std::istream& in, const std::string& source,
                                     const ConfigOverrides& overrides = {},
                                     const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario_config(const std::filesystem::path& file,
                                    const ConfigOverrides& overrides = {});

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison;  // "<=", ">=", "=="
  std::string detail;
};

struct RunReport {
  std::string scenario;
  std::string schema_version;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<Check> checks;
  std::vector<std::string> outputs;
  std::optional<std::string> generated_at;

  bool passed() const;
  const Check* find(std::string_view name) const;
  /// Stable, pretty-printed JSON.
  std::string to_json() const;
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  int version;
  std::vector<std::string> checks;

  std::string schema_version() const;
};

const std::vector<ScenarioInfo>& registered_scenarios();
const ScenarioInfo* find_scenario(std::string_view name);

/// Runs a registered scenario, writes its files to config.output_dir (plus
/// report.json) and returns the report. Throws ConfigError for unknown
/// scenarios and malformed parameters.
RunReport run_scenario(const ScenarioConfig& config);

/// Unitary-only evolution versus unitary evolution interrupted by measurement
/// transitions, for a two-level system with H = diag(gap/2, -gap/2).
struct UnitaryCollapseParams {
  double gap = 1.0;
  double collapse_rate = 1.0;
  double t_end = 20.0;
  std::size_t unitary_steps = 1000;
  std::size_t members = 500;
  std::size_t samples = 101;
  /// Overrides the evenly spaced `samples`-point grid on [0, t_end].
  std::vector<double> sample_times;
  /// Bloch polar angles, measured from the Hamiltonian's axis, of the initial
  /// pure state and of the measurement axis.
  double initial_angle = 1.5707963267948966;
  double measurement_angle = 1.5707963267948966;
  std::uint64_t seed = 0;
};

struct UnitaryCollapseResult {
  std::vector<double> unitary_times;
  std::vector<double> unitary_entropy;
  double unitary_max_drift = 0.0;
  std::vector<double> sample_times;
  std::vector<double> collapse_mean_entropy;
  std::vector<double> collapse_mean_purity;
  double mean_collapses = 0.0;
};

UnitaryCollapseResult unitary_vs_collapse(const UnitaryCollapseParams& params);

}  // namespace stosszahl::experiment
