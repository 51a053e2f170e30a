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

#include <nlohmann/json.hpp>

#include "stosszahl/experiment.hpp"

namespace stosszahl::experiment {

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const Check* RunReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["scenario"] = scenario;
  j["passed"] = passed();
  if (generated_at) j["generated_at"] = *generated_at;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  auto& list = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"passed", c.passed},
                    {"measured", c.measured},
                    {"comparison", c.comparison},
                    {"threshold", c.threshold},
                    {"detail", c.detail}});
  }
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

}  // namespace stosszahl::experiment
