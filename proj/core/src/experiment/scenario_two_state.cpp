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

#include <algorithm>
#include <cmath>

#include "scenarios.hpp"
#include "stosszahl/master_equation.hpp"

namespace stosszahl::experiment::detail {

RunReport run_two_state(const ScenarioConfig& config) {
  require_sections(config, {"two_state"});
  const SectionReader s(config.parameters, "two_state");
  const double r12 = s.real("r12", 1.0);
  const double r21 = s.real("r21", 1.0);
  const std::vector<double> p0_values = s.reals("p0", std::vector<double>{1.0, 0.0});
  const double t_end = s.real("t_end", 5.0);
  const std::uint64_t points = s.count("points", 50);
  config.parameters.reject_unused();

  if (!(r12 >= 0.0) || !(r21 >= 0.0) || r12 + r21 == 0.0) {
    throw ConfigError(s.path("r12"), "rates must be nonnegative and not both zero");
  }
  if (p0_values.size() != 2) throw ConfigError(s.path("p0"), "expected two probabilities");
  if (!(t_end > 0.0)) throw ConfigError(s.path("t_end"), "must be positive");
  if (points < 2) throw ConfigError(s.path("points"), "need at least 2 points");

  const auto p0 = [&] {
    try {
      return ProbabilityVector(p0_values);
    } catch (const InvalidArgument& e) {
      throw ConfigError(s.path("p0"), e.what());
    }
  }();

  std::vector<double> times = config.sample_times;
  if (times.empty()) {
    for (std::uint64_t i = 0; i < points; ++i) {
      times.push_back(t_end * static_cast<double>(i) / static_cast<double>(points - 1));
    }
  }

  ReportBuilder report(config);
  report.param("r12", r12);
  report.param("r21", r21);
  report.param("p0", join(p0_values));
  report.param("grid_points", static_cast<double>(times.size()));
  report.param("t_first", times.front());
  report.param("t_last", times.back());

  RMatrix rates(2, 2);
  rates << 0.0, r12, r21, 0.0;  // (i, j) is the rate j -> i
  const auto m = master::build_master_operator(master::RateMatrix(rates));
  const auto eq = master::equilibrium(m);
  const auto series = master::entropy_series(m, p0, times);

  struct Row {
    double t, p1, p2, s, d;
  };
  std::vector<Row> rows;
  double max_err = 0.0;
  double max_sum_err = 0.0;
  double max_kl_increase = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto p = master::evolve_probabilities(m, p0, times[i]);
    const auto exact = master::two_state_closed_form(r12, r21, p0, times[i]);
    max_err = std::max({max_err, std::abs(p[0] - exact[0]), std::abs(p[1] - exact[1])});
    max_sum_err = std::max(max_sum_err, std::abs(p[0] + p[1] - 1.0));
    if (i > 0) max_kl_increase = std::max(max_kl_increase, series[i].relative - series[i - 1].relative);
    rows.push_back({times[i], p[0], p[1], series[i].shannon, series[i].relative});
  }
  const double relax = r12 + r21;
  const double eq_err = std::max(std::abs(eq[0] - r12 / relax), std::abs(eq[1] - r21 / relax));

  report.at_most("closed_form_max_error", max_err, 1e-8,
                 "max |expm route - closed form| over the grid");
  report.at_most("equilibrium_error", eq_err, 1e-10,
                 "null-space equilibrium versus (r12, r21) / (r12 + r21)");
  report.at_most("probability_conservation", max_sum_err, 1e-10, "max |P1 + P2 - 1|");
  report.at_most("kl_non_increasing", max_kl_increase, 1e-10,
                 "largest step increase of D(p(t) || p_eq)");

  OutputSink sink(config);
  sink.write("relaxation.csv", [&](std::ostream& out) {
    out << "t,P1,P2,S,D\n";
    for (const auto& r : rows) {
      out << format_real(r.t) << ',' << format_real(r.p1) << ',' << format_real(r.p2) << ','
          << format_real(r.s) << ',' << format_real(r.d) << '\n';
    }
  });
  return report.finish(sink);
}

}  // namespace stosszahl::experiment::detail
