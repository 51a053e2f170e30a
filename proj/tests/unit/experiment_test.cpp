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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "stosszahl/common.hpp"
#include "stosszahl/experiment.hpp"

namespace stosszahl::experiment {
namespace {

namespace fs = std::filesystem;

ScenarioConfig parse(const std::string& text, const ConfigOverrides& overrides = {}) {
  std::istringstream in(text);
  return parse_scenario_config(in, "<test>", overrides);
}

std::string field_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("stosszahl_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kTwoState =
    "[scenario]\nname = two-state-relaxation\nseed = 3\n"
    "[two_state]\nr12 = 1\nr21 = 1\np0 = 1, 0\nt_end = 5\npoints = 50\n";

TEST(ConfigDocument, ParsesSectionsAndComments) {
  std::istringstream in("# header\n[a]\nx = 1  # trailing\n; other comment\ny=two words\n\n[b]\nz = 3\n");
  const auto doc = ConfigDocument::parse(in);
  EXPECT_EQ(doc.section_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(doc.section("a")->at("x").value, "1");
  EXPECT_EQ(doc.section("a")->at("y").value, "two words");
  EXPECT_EQ(doc.section("b")->at("z").line, 8u);
}

TEST(ConfigDocument, RejectsMalformedText) {
  const auto bad = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(ConfigDocument::parse(in), ConfigError) << text;
  };
  bad("x = 1\n");                 // no section
  bad("[a]\nx = 1\nx = 2\n");     // duplicate key
  bad("[a]\n[a]\n");              // duplicate section
  bad("[a\n");                    // unterminated header
  bad("[a]\njust words\n");       // no '='
  bad("[a]\nbad key = 1\n");      // invalid key
}

TEST(ConfigDocument, UnusedKeysAreErrorsWithFieldPath) {
  std::istringstream in("[a]\nused = 1\ntypo = 2\n");
  const auto doc = ConfigDocument::parse(in);
  const SectionReader s(doc, "a");
  EXPECT_EQ(s.real("used"), 1.0);
  EXPECT_EQ(field_of([&] { doc.reject_unused(); }), "a.typo");
}

TEST(SectionReader, TypedAccessors) {
  std::istringstream in("[p]\nf = 1/3, 2/3\nn = 12\nx = 2.5e-1\nneg = -1\nfrac = 1.5\nzero = 1/0\n");
  const auto doc = ConfigDocument::parse(in);
  const SectionReader s(doc, "p");
  const auto f = s.reals("f");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], 1.0 / 3.0);
  EXPECT_EQ(f[1], 2.0 / 3.0);
  EXPECT_EQ(s.count("n"), 12u);
  EXPECT_EQ(s.real("x"), 0.25);
  EXPECT_EQ(field_of([&] { s.count("neg"); }), "p.neg");
  EXPECT_EQ(field_of([&] { s.count("frac"); }), "p.frac");
  EXPECT_EQ(field_of([&] { s.real("zero"); }), "p.zero");
  EXPECT_EQ(field_of([&] { s.real("missing"); }), "p.missing");
  EXPECT_EQ(s.real("missing", 4.0), 4.0);
  EXPECT_FALSE(s.optional_real("absent").has_value());
}

TEST(TimeGrid, FormsAndErrors) {
  const auto g = parse_time_grid("0:5:11", "f");
  ASSERT_EQ(g.size(), 11u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 5.0);
  EXPECT_DOUBLE_EQ(g[3], 1.5);
  EXPECT_EQ(parse_time_grid("0.5, 1, 2", "f"), (std::vector<double>{0.5, 1.0, 2.0}));
  EXPECT_THROW(parse_time_grid("0:5:1", "f"), ConfigError);
  EXPECT_THROW(parse_time_grid("5:0:3", "f"), ConfigError);
  EXPECT_THROW(parse_time_grid("1, 1", "f"), ConfigError);
  EXPECT_THROW(parse_time_grid("-1, 1", "f"), ConfigError);
  EXPECT_THROW(parse_time_grid("0:1", "f"), ConfigError);
}

TEST(ScenarioConfig, SeedIsRequiredUnlessOverridden) {
  const std::string text = "[scenario]\nname = two-state-relaxation\n[two_state]\n";
  EXPECT_EQ(field_of([&] { parse(text); }), "scenario.seed");
  ConfigOverrides o;
  o.seed = 99;
  EXPECT_EQ(parse(text, o).seed, 99u);
  EXPECT_EQ(parse(std::string(kTwoState), o).seed, 99u);
  EXPECT_EQ(parse(std::string(kTwoState)).seed, 3u);
}

TEST(ScenarioConfig, OutputDirectoryPrecedence) {
  const std::string text =
      "[scenario]\nname = born-statistics\nseed = 1\noutput_dir = from_config\n";
  std::istringstream in1(text);
  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(parse_scenario_config(in1, "t", {}, "/base").output_dir, fs::path("/base/from_config"));
  ::setenv(kOutputDirEnv, "/from_env", 1);
  EXPECT_EQ(parse(text).output_dir, fs::path("/from_env"));
  ConfigOverrides o;
  o.output_dir = "/from_flag";
  EXPECT_EQ(parse(text, o).output_dir, fs::path("/from_flag"));
  ::unsetenv(kOutputDirEnv);
}

TEST(ScenarioConfig, HeaderTimestampFlag) {
  EXPECT_TRUE(parse(kTwoState).header_timestamp);
  ConfigOverrides o;
  o.no_header_timestamp = true;
  EXPECT_FALSE(parse(kTwoState, o).header_timestamp);
  EXPECT_EQ(field_of([] {
              parse("[scenario]\nname = x\nseed = 1\nheader_timestamp = maybe\n");
            }),
            "scenario.header_timestamp");
}

TEST(Registry, ScenariosAndVersionedCheckSets) {
  const auto& all = registered_scenarios();
  std::vector<std::string> names;
  for (const auto& s : all) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"two-state-relaxation", "unitary-vs-collapse",
                                             "born-statistics", "gas-equilibrium",
                                             "ledger-audit"}));
  for (const auto& s : all) {
    EXPECT_FALSE(s.checks.empty()) << s.name;
    EXPECT_EQ(s.schema_version(), "stosszahl.report/" + s.name + "/v" + std::to_string(s.version));
  }
  EXPECT_EQ(find_scenario("nope"), nullptr);
}

TEST(RunScenario, UnknownScenarioAndSections) {
  EXPECT_EQ(field_of([] { run_scenario(parse("[scenario]\nname = nope\nseed = 1\n")); }),
            "scenario.name");
  EXPECT_EQ(field_of([] {
              run_scenario(parse(std::string(kTwoState) + "[gas]\nmolecules = 4\n"));
            }),
            "gas");
  EXPECT_EQ(field_of([] { run_scenario(parse(std::string(kTwoState) + "r13 = 2\n")); }),
            "two_state.r13");
  EXPECT_EQ(field_of([] {
              run_scenario(parse(
                  "[scenario]\nname = two-state-relaxation\nseed = 1\n[two_state]\np0 = 0.5\n"));
            }),
            "two_state.p0");
}

TEST(RunScenario, TwoStateReportCoversEveryCheckOnce) {
  const RunReport report = run_scenario(parse(kTwoState));
  const ScenarioInfo* info = find_scenario("two-state-relaxation");
  ASSERT_EQ(report.checks.size(), info->checks.size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    EXPECT_EQ(report.checks[i].name, info->checks[i]);
    EXPECT_TRUE(report.checks[i].passed) << report.checks[i].name << " "
                                         << report.checks[i].measured;
  }
  EXPECT_LE(report.find("closed_form_max_error")->measured, 1e-8);
  EXPECT_EQ(report.schema_version, info->schema_version());
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.outputs.empty());
  const std::string json = report.to_json();
  EXPECT_NE(json.find("\"schema_version\""), std::string::npos);
  EXPECT_NE(json.find("closed_form_max_error"), std::string::npos);
}

TEST(RunScenario, ChecksCanFail) {
  // a significance near 1 leaves no room for sampling noise
  const RunReport report = run_scenario(parse(
      "[scenario]\nname = born-statistics\nseed = 5\n[born]\nweights = 1/3, 2/3\ndraws = 1000\n"
      "significance = 0.999999\n"));
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.find("chi_square")->passed);
}

TEST(RunScenario, OutputsAreByteIdenticalWithoutTimestamps) {
  const std::string text =
      "[scenario]\nname = born-statistics\nseed = 11\n[born]\nweights = 0.2, 0, 0.8\n"
      "draws = 5000\n";
  const fs::path dir_a = fresh_dir("bytes_a");
  const fs::path dir_b = fresh_dir("bytes_b");
  ConfigOverrides o;
  o.no_header_timestamp = true;
  o.output_dir = dir_a;
  const RunReport a = run_scenario(parse(text, o));
  o.output_dir = dir_b;
  const RunReport b = run_scenario(parse(text, o));
  ASSERT_FALSE(a.outputs.empty());
  EXPECT_EQ(a.outputs, b.outputs);
  for (const auto& name : a.outputs) {
    EXPECT_EQ(slurp(dir_a / name), slurp(dir_b / name)) << name;
  }
  EXPECT_TRUE(fs::exists(dir_b / "report.json"));
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.find("zero_weight_outcomes")->measured, 0.0);
}

TEST(RunScenario, TimestampHeaderIsTheOnlyDifference) {
  const std::string text = std::string(kTwoState);
  ConfigOverrides o;
  o.output_dir = fresh_dir("stamp");
  const RunReport stamped = run_scenario(parse(text, o));
  const std::string with = slurp(*o.output_dir / "relaxation.csv");
  o.no_header_timestamp = true;
  o.output_dir = fresh_dir("nostamp");
  run_scenario(parse(text, o));
  const std::string without = slurp(*o.output_dir / "relaxation.csv");
  ASSERT_EQ(with.rfind("# stosszahl two-state-relaxation generated ", 0), 0u);
  EXPECT_EQ(with.substr(with.find('\n') + 1), without);
  EXPECT_EQ(without.substr(0, without.find('\n')), "t,P1,P2,S,D");
  EXPECT_TRUE(stamped.generated_at.has_value());
}

TEST(UnitaryVsCollapse, UnitaryBranchIsFlat) {
  UnitaryCollapseParams p;
  p.members = 20;
  p.t_end = 5.0;
  const auto r = unitary_vs_collapse(p);
  EXPECT_LT(r.unitary_max_drift, 1e-10);
  EXPECT_EQ(r.unitary_entropy.size(), p.unitary_steps + 1);
}

TEST(UnitaryVsCollapse, MeanPurityFollowsMomentEquations) {
  // In the Bloch plane the Hamiltonian rotates (x, y) at angular rate `gap`
  // and each transition sends (x, y) to (x, 0). The ensemble means
  // X = <x^2>, Y = <y^2>, C = <xy> then obey the linear system
  //   X' = -2g C,  Y' = 2g C - mu Y,  C' = g (X - Y) - mu C
  // and the mean purity is (1 + X + Y) / 2.
  UnitaryCollapseParams p;
  p.members = 4000;
  p.t_end = 4.0;
  p.samples = 9;
  p.unitary_steps = 10;
  p.seed = 17;
  for (auto [gap, rate] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
    p.gap = gap;
    p.collapse_rate = rate;
    RMatrix a(3, 3);
    a << 0.0, 0.0, -2.0 * gap,
         0.0, -rate, 2.0 * gap,
         gap, -gap, -rate;
    const auto r = unitary_vs_collapse(p);
    for (std::size_t j = 0; j < r.sample_times.size(); ++j) {
      const double t = r.sample_times[j];
      const RVector m = oracle::expm_reference(a * t) * RVector::Unit(3, 0);
      EXPECT_NEAR(r.collapse_mean_purity[j], 0.5 * (1.0 + m(0) + m(1)), 0.02) << gap << " " << t;
      EXPECT_LE(r.collapse_mean_entropy[j], std::numbers::ln2 + 1e-12);
    }
    EXPECT_NEAR(r.mean_collapses, rate * p.t_end, 0.2);
  }
}

TEST(UnitaryVsCollapse, RejectsCommutingSetups) {
  UnitaryCollapseParams p;
  p.initial_angle = 0.0;
  EXPECT_THROW(unitary_vs_collapse(p), InvalidArgument);
  p.initial_angle = 1.0;
  p.measurement_angle = std::numbers::pi;
  EXPECT_THROW(unitary_vs_collapse(p), InvalidArgument);
  p.measurement_angle = 1.0;
  p.collapse_rate = 0.0;
  EXPECT_THROW(unitary_vs_collapse(p), InvalidArgument);
}

TEST(RunScenario, SmallGasEnsemblePasses) {
  ConfigOverrides o;
  o.no_header_timestamp = true;
  o.output_dir = fresh_dir("gas");
  const RunReport report = run_scenario(parse(
      "[scenario]\nname = gas-equilibrium\nseed = 2\n"
      "[gas]\nmolecules = 20\ninitial_excited = 10\nt_max = 20\nensemble = 200\n"
      "equilibrium_after = 10\ncrosscheck_times = 0.5, 1, 3\nmean_k_tolerance = 0.5\n"
      "entropy_fraction = 0.85\ntv_tolerance = 0.12\n",
      o));
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.measured;
  EXPECT_EQ(report.outputs.size(), 5u);

  // the exported ledger audits clean through the ledger-audit scenario
  ConfigOverrides ao;
  ao.no_header_timestamp = true;
  const RunReport audit = run_scenario(parse(
      "[scenario]\nname = ledger-audit\nseed = 0\n[audit]\nledger = " +
          (*o.output_dir / "ledger_member0.csv").string() +
          "\nmolecules = 20\ninitial_excited = 10\n",
      ao));
  EXPECT_TRUE(audit.passed());
  EXPECT_EQ(field_of([] {
              run_scenario(parse("[scenario]\nname = gas-equilibrium\nseed = 1\n[gas]\n"
                                 "molecules = 21\ninitial_excited = 3\n"));
            }),
            "gas.molecules");
}

TEST(RunScenario, AuditDetectsCorruptLedger) {
  const fs::path dir = fresh_dir("corrupt");
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "ledger.csv");
    out << "event_index,t_e,t_a,emitter,absorber,winner_weight,confirmation_set_size\n"
        << "0,1,1.5,0,3,0.5,2\n"
        << "1,2,1.9,3,0,0.5,2\n"
        << "2,3,3.5,3,1,0.5,2\n";
  }
  const RunReport report = run_scenario(parse(
      "[scenario]\nname = ledger-audit\nseed = 0\n[audit]\nledger = " + (dir / "ledger.csv").string() +
      "\nmolecules = 4\ninitial_excited = 1\n"));
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.find("ordering_violations")->measured, 1.0);
  EXPECT_EQ(report.find("precondition_violations")->measured, 1.0);
  EXPECT_EQ(field_of([] {
              run_scenario(parse(
                  "[scenario]\nname = ledger-audit\nseed = 0\n[audit]\nledger = /nonexistent.csv\n"));
            }),
            "audit.ledger");
}

}  // namespace
}  // namespace stosszahl::experiment
