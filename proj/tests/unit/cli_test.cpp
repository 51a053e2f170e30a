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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stosszahl/cli.hpp"
#include "stosszahl/experiment.hpp"

namespace stosszahl::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "stosszahl_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

const char* kTwoState =
    "[scenario]\nname = two-state-relaxation\nseed = 1\n[two_state]\nt_end = 5\n";

TEST(Cli, ListScenarios) {
  const auto r = call({"list-scenarios"});
  EXPECT_EQ(r.code, kPass);
  for (const auto& s : experiment::registered_scenarios()) {
    EXPECT_NE(r.out.find(s.name), std::string::npos);
    for (const auto& c : s.checks) EXPECT_NE(r.out.find(c), std::string::npos);
  }
}

TEST(Cli, RunPassingScenario) {
  ::unsetenv(experiment::kOutputDirEnv);
  const auto cfg = write_config("pass.ini", kTwoState);
  const auto r = call({"run", "--config", cfg.string()});
  EXPECT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("PASS closed_form_max_error"), std::string::npos);
}

TEST(Cli, FailingCheckExitsOne) {
  const auto cfg = write_config(
      "fail.ini",
      "[scenario]\nname = born-statistics\nseed = 3\n[born]\ndraws = 1000\n"
      "significance = 0.999999\n");
  const auto r = call({"run", "--config", cfg.string(), "--json"});
  EXPECT_EQ(r.code, kCheckFailure);
  EXPECT_NE(r.out.find("\"passed\": false"), std::string::npos);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(call({"run", "--config", "/does/not/exist.ini"}).code, kConfigError);
  const auto unknown = write_config("unknown.ini", "[scenario]\nname = nope\nseed = 1\n");
  const auto r = call({"run", "--config", unknown.string()});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("scenario.name"), std::string::npos);
  const auto typo = write_config("typo.ini", std::string(kTwoState) + "tend = 3\n");
  const auto t = call({"run", "--config", typo.string()});
  EXPECT_EQ(t.code, kConfigError);
  EXPECT_NE(t.err.find("two_state.tend"), std::string::npos);
  const auto no_seed = write_config("noseed.ini", "[scenario]\nname = two-state-relaxation\n");
  EXPECT_EQ(call({"run", "--config", no_seed.string()}).code, kConfigError);
  EXPECT_EQ(call({"run", "--config", no_seed.string(), "--seed", "4"}).code, kPass);
  EXPECT_EQ(call({"run"}).code, kConfigError);
  EXPECT_EQ(call({"frobnicate"}).code, kConfigError);
  EXPECT_EQ(call({}).code, kConfigError);
  EXPECT_EQ(call({"run", "--config", no_seed.string(), "--seed", "-1"}).code, kConfigError);
}

TEST(Cli, OutputFlagBeatsEnvironment) {
  const fs::path env_dir = fs::temp_directory_path() / "stosszahl_cli_env";
  const fs::path flag_dir = fs::temp_directory_path() / "stosszahl_cli_flag";
  fs::remove_all(env_dir);
  fs::remove_all(flag_dir);
  const auto cfg = write_config("out.ini", kTwoState);
  ::setenv(experiment::kOutputDirEnv, env_dir.c_str(), 1);
  EXPECT_EQ(call({"run", "--config", cfg.string()}).code, kPass);
  EXPECT_TRUE(fs::exists(env_dir / "relaxation.csv"));
  EXPECT_EQ(call({"run", "--config", cfg.string(), "--out", flag_dir.string(),
                  "--no-header-timestamp"})
                .code,
            kPass);
  EXPECT_TRUE(fs::exists(flag_dir / "relaxation.csv"));
  ::unsetenv(experiment::kOutputDirEnv);
  std::ifstream in(flag_dir / "relaxation.csv");
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "t,P1,P2,S,D");
}

TEST(Cli, AuditSubcommand) {
  const fs::path dir = fs::temp_directory_path() / "stosszahl_cli_audit";
  fs::create_directories(dir);
  const fs::path good = dir / "good.csv";
  const fs::path bad = dir / "bad.csv";
  const std::string header =
      "event_index,t_e,t_a,emitter,absorber,winner_weight,confirmation_set_size\n";
  std::ofstream(good) << header << "0,1,1.5,0,2,0.5,2\n1,2,2.5,2,1,0.5,2\n";
  std::ofstream(bad) << header << "0,1,0.5,0,2,0.5,2\n";
  EXPECT_EQ(call({"audit", "--ledger", good.string()}).code, kPass);
  EXPECT_EQ(call({"audit", "--ledger", good.string(), "--molecules", "3", "--initial-excited",
                  "1"})
                .code,
            kPass);
  const auto r = call({"audit", "--ledger", bad.string()});
  EXPECT_EQ(r.code, kCheckFailure);
  EXPECT_NE(r.out.find("FAIL ordering_violations"), std::string::npos);
  EXPECT_EQ(call({"audit", "--ledger", (dir / "missing.csv").string()}).code, kConfigError);
  EXPECT_EQ(call({"audit"}).code, kConfigError);
  EXPECT_EQ(call({"audit", "--ledger", good.string(), "--initial-excited", "1"}).code,
            kConfigError);
}

}  // namespace
}  // namespace stosszahl::cli
