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

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "scenarios.hpp"
#include "stosszahl/measurement.hpp"

namespace stosszahl::experiment::detail {

RunReport run_born(const ScenarioConfig& config) {
  require_sections(config, {"born"});
  const SectionReader s(config.parameters, "born");
  const std::vector<double> weight_values =
      s.reals("weights", std::vector<double>{1.0 / 3.0, 2.0 / 3.0});
  const std::uint64_t draws = s.count("draws", 100000);
  const double significance = s.real("significance", 0.001);
  config.parameters.reject_unused();

  const auto weights = [&] {
    try {
      return ProbabilityVector(weight_values);
    } catch (const InvalidArgument& e) {
      throw ConfigError(s.path("weights"), e.what());
    }
  }();
  if (draws == 0) throw ConfigError(s.path("draws"), "must be positive");
  if (!(significance > 0.0 && significance < 1.0)) {
    throw ConfigError(s.path("significance"), "must lie in (0, 1)");
  }

  std::vector<std::uint64_t> observed(weights.size(), 0);
  std::uint64_t mismatches = 0;
  {
    Rng rng = make_rng(config.seed);
    Rng replay = make_rng(config.seed);
    for (std::uint64_t i = 0; i < draws; ++i) {
      const std::size_t k = collapse_sample(weights, rng);
      ++observed[k];
      if (collapse_sample(weights, replay) != k) ++mismatches;
    }
  }

  double chi2 = 0.0;
  std::size_t positive = 0;
  std::uint64_t hits_on_zero = 0;
  const auto n = static_cast<double>(draws);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] > kNegligibleWeight) {
      ++positive;
      const double expected = n * weights[k];
      const double diff = static_cast<double>(observed[k]) - expected;
      chi2 += diff * diff / expected;
    } else {
      hits_on_zero += observed[k];
    }
  }
  const std::size_t dof = positive - 1;
  const double critical =
      dof == 0 ? 0.0
               : boost::math::quantile(boost::math::chi_squared(static_cast<double>(dof)),
                                       1.0 - significance);

  ReportBuilder report(config);
  report.param("weights", join(weight_values));
  report.param("draws", static_cast<double>(draws));
  report.param("significance", significance);
  report.param("degrees_of_freedom", static_cast<double>(dof));
  report.at_most("chi_square", chi2, critical,
                 "Pearson statistic versus the chi-square quantile at 1 - significance");
  report.at_most("zero_weight_outcomes", static_cast<double>(hits_on_zero), 0.0,
                 "draws landing on outcomes with negligible weight");
  report.at_most("seed_reproducibility", static_cast<double>(mismatches), 0.0,
                 "outcome mismatches between two streams with the same seed");

  OutputSink sink(config);
  sink.write("born_counts.csv", [&](std::ostream& out) {
    out << "outcome,weight,expected,observed\n";
    for (std::size_t k = 0; k < weights.size(); ++k) {
      out << k << ',' << format_real(weights[k]) << ',' << format_real(n * weights[k]) << ','
          << observed[k] << '\n';
    }
  });
  return report.finish(sink);
}

}  // namespace stosszahl::experiment::detail
