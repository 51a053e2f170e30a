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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "../csv_util.hpp"
#include "stosszahl/experiment.hpp"

namespace stosszahl::experiment {

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)) {}

namespace {

std::string_view strip_comment(std::string_view line) {
  const auto pos = line.find_first_of("#;");
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

double parse_number(std::string_view text, const std::string& field) {
  const auto t = csv::trim(text);
  const auto slash = t.find('/');
  const auto parse_plain = [&](std::string_view s) {
    s = csv::trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw ConfigError(field, "'" + std::string(text) + "' is not a finite number");
    }
    return v;
  };
  if (slash == std::string_view::npos) return parse_plain(t);
  const double num = parse_plain(t.substr(0, slash));
  const double den = parse_plain(t.substr(slash + 1));
  if (den == 0.0) throw ConfigError(field, "division by zero in '" + std::string(text) + "'");
  return num / den;
}

std::uint64_t parse_count(std::string_view text, const std::string& field) {
  const auto t = csv::trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(field, "'" + std::string(text) + "' is not a nonnegative integer");
  }
  return v;
}

}  // namespace

ConfigDocument ConfigDocument::parse(std::istream& in, const std::string& source) {
  ConfigDocument doc;
  doc.source_ = source;
  std::string line;
  std::string current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = csv::trim(strip_comment(line));
    if (body.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError(where, "unterminated section header");
      const auto name = csv::trim(body.substr(1, body.size() - 2));
      if (!valid_identifier(name)) throw ConfigError(where, "invalid section name");
      if (doc.sections_.count(name) != 0) {
        throw ConfigError(std::string(name), "section declared twice (" + where + ")");
      }
      current = std::string(name);
      doc.sections_[current];
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where, "expected 'key = value'");
    if (current.empty()) throw ConfigError(where, "key outside of any [section]");
    const auto key = csv::trim(body.substr(0, eq));
    const auto value = csv::trim(body.substr(eq + 1));
    if (!valid_identifier(key)) throw ConfigError(where, "invalid key name");
    auto& section = doc.sections_[current];
    const std::string field = current + "." + std::string(key);
    if (section.count(key) != 0) throw ConfigError(field, "duplicate key (" + where + ")");
    section.emplace(std::string(key), Entry{std::string(value), line_no, false});
  }
  return doc;
}

bool ConfigDocument::has_section(std::string_view name) const {
  return sections_.find(name) != sections_.end();
}

const ConfigDocument::Section* ConfigDocument::section(std::string_view name) const {
  const auto it = sections_.find(name);
  return it == sections_.end() ? nullptr : &it->second;
}

std::vector<std::string> ConfigDocument::section_names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : sections_) names.push_back(name);
  return names;
}

void ConfigDocument::set(const std::string& section, const std::string& key, std::string value) {
  sections_[section][key] = Entry{std::move(value), 0, false};
}

void ConfigDocument::reject_unused() const {
  for (const auto& [name, section] : sections_) {
    for (const auto& [key, entry] : section) {
      if (!entry.used) {
        throw ConfigError(name + "." + key, "unknown key (line " + std::to_string(entry.line) +
                                                " of " + source_ + ")");
      }
    }
  }
}

SectionReader::SectionReader(const ConfigDocument& doc, std::string section)
    : doc_(doc), section_(std::move(section)) {}

const ConfigDocument::Entry* SectionReader::find(std::string_view key) const {
  const auto* s = doc_.section(section_);
  if (s == nullptr) return nullptr;
  const auto it = s->find(key);
  if (it == s->end()) return nullptr;
  it->second.used = true;
  return &it->second;
}

bool SectionReader::has(std::string_view key) const {
  const auto* s = doc_.section(section_);
  return s != nullptr && s->find(key) != s->end();
}

std::string SectionReader::text(std::string_view key, std::optional<std::string> fallback) const {
  if (const auto* e = find(key)) return e->value;
  if (fallback) return *fallback;
  throw ConfigError(path(key), "required key is missing");
}

double SectionReader::real(std::string_view key, std::optional<double> fallback) const {
  if (const auto* e = find(key)) return parse_number(e->value, path(key));
  if (fallback) return *fallback;
  throw ConfigError(path(key), "required key is missing");
}

std::uint64_t SectionReader::count(std::string_view key,
                                   std::optional<std::uint64_t> fallback) const {
  if (const auto* e = find(key)) return parse_count(e->value, path(key));
  if (fallback) return *fallback;
  throw ConfigError(path(key), "required key is missing");
}

std::vector<double> SectionReader::reals(std::string_view key,
                                         std::optional<std::vector<double>> fallback) const {
  if (const auto* e = find(key)) {
    std::vector<double> out;
    for (const auto& cell : csv::split(e->value)) out.push_back(parse_number(cell, path(key)));
    return out;
  }
  if (fallback) return *fallback;
  throw ConfigError(path(key), "required key is missing");
}

std::optional<std::string> SectionReader::optional_text(std::string_view key) const {
  if (const auto* e = find(key)) return e->value;
  return std::nullopt;
}

std::optional<double> SectionReader::optional_real(std::string_view key) const {
  if (const auto* e = find(key)) return parse_number(e->value, path(key));
  return std::nullopt;
}

std::optional<std::uint64_t> SectionReader::optional_count(std::string_view key) const {
  if (const auto* e = find(key)) return parse_count(e->value, path(key));
  return std::nullopt;
}

std::vector<double> parse_time_grid(std::string_view text, const std::string& field) {
  std::vector<double> grid;
  const auto parts = csv::split(text, ':');
  if (parts.size() == 3) {
    const double start = parse_number(parts[0], field);
    const double stop = parse_number(parts[1], field);
    const std::uint64_t count = parse_count(parts[2], field);
    if (count < 2) throw ConfigError(field, "a start:stop:count grid needs count >= 2");
    if (!(stop > start)) throw ConfigError(field, "grid stop must exceed start");
    for (std::uint64_t i = 0; i < count; ++i) {
      grid.push_back(i + 1 == count ? stop
                                    : start + (stop - start) * static_cast<double>(i) /
                                                  static_cast<double>(count - 1));
    }
  } else if (parts.size() == 1) {
    for (const auto& cell : csv::split(text)) grid.push_back(parse_number(cell, field));
  } else {
    throw ConfigError(field, "expected 'start:stop:count' or a comma-separated list");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0) throw ConfigError(field, "times must be >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ConfigError(field, "times must be strictly increasing");
    }
  }
  return grid;
}

ScenarioConfig parse_scenario_config(std::istream& in, const std::string& source,
                                     const ConfigOverrides& overrides,
                                     const std::filesystem::path& base_dir) {
  ScenarioConfig config;
  config.parameters = ConfigDocument::parse(in, source);
  config.base_dir = base_dir;
  if (!config.parameters.has_section("scenario")) {
    throw ConfigError("scenario", "missing [scenario] section");
  }
  const SectionReader s(config.parameters, "scenario");
  config.scenario = s.text("name");

  if (overrides.seed) {
    config.seed = *overrides.seed;
    s.optional_count("seed");
  } else {
    const auto seed = s.optional_count("seed");
    if (!seed) throw ConfigError("scenario.seed", "a seed is required (or pass --seed)");
    config.seed = *seed;
  }

  const auto configured_out = s.optional_text("output_dir");
  if (overrides.output_dir) {
    config.output_dir = *overrides.output_dir;
  } else if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    config.output_dir = env;
  } else if (configured_out) {
    config.output_dir = (base_dir / *configured_out).lexically_normal();
  }

  if (const auto grid = s.optional_text("sample_times")) {
    config.sample_times = parse_time_grid(*grid, s.path("sample_times"));
  }
  const std::string stamp = s.text("header_timestamp", std::string("true"));
  if (stamp != "true" && stamp != "false") {
    throw ConfigError(s.path("header_timestamp"), "expected true or false");
  }
  config.header_timestamp = stamp == "true" && !overrides.no_header_timestamp;
  return config;
}

ScenarioConfig load_scenario_config(const std::filesystem::path& file,
                                    const ConfigOverrides& overrides) {
  std::ifstream in(file);
  if (!in) throw ConfigError("", "cannot open config file " + file.string());
  return parse_scenario_config(in, file.string(), overrides, file.parent_path());
}

}  // namespace stosszahl::experiment
