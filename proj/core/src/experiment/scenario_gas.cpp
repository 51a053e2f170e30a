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
#include <fstream>

#include "../csv_util.hpp"
#include "scenarios.hpp"
#include "stosszahl/master_equation.hpp"
#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::experiment::detail {

namespace {

RMatrix read_coupling_table(const std::filesystem::path& file, const std::string& field) {
  std::ifstream in(file);
  if (!in) throw ConfigError(field, "cannot open " + file.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (csv::next_data_line(in, line, line_no)) {
      std::vector<double> row;
      for (const auto& cell : csv::split(line)) row.push_back(csv::parse_double(cell, line_no));
      rows.push_back(std::move(row));
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(field, file.string() + " " + e.what());
  }
  const auto n = static_cast<Index>(rows.size());
  RMatrix table(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ConfigError(field, "coupling table must be square");
    }
    for (Index j = 0; j < n; ++j) table(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return table;
}

}  // namespace

RunReport run_gas(const ScenarioConfig& config) {
  require_sections(config, {"gas"});
  const SectionReader s(config.parameters, "gas");
  gas::GasConfig gas;
  gas.molecules = s.count("molecules", 100);
  gas.initial_excited = s.count("initial_excited", 50);
  gas.decay_rate = s.real("decay_rate", 1.0);
  gas.delay = s.optional_real("delay");
  gas.t_max = s.real("t_max", 50.0);
  const auto coupling_file = s.optional_text("coupling_table");
  const std::uint64_t members = s.count("ensemble", 500);
  const double equilibrium_after = s.real("equilibrium_after", 30.0);
  const std::vector<double> crosscheck_times =
      s.reals("crosscheck_times", std::vector<double>{2.0, 5.0, 10.0});
  const double mean_k_tolerance = s.real("mean_k_tolerance", 1.0);
  const double entropy_fraction = s.real("entropy_fraction", 0.95);
  const double density_tolerance = s.real("event_density_tolerance", 0.2);
  const double tv_tolerance = s.real("tv_tolerance", 0.1);
  const auto threads = static_cast<unsigned>(s.count("threads", 0));
  config.parameters.reject_unused();

  gas.seed = config.seed;
  if (coupling_file) gas.coupling = read_coupling_table(config.base_dir / *coupling_file, s.path("coupling_table"));
  try {
    gas.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError("gas", e.what());
  }
  if (gas.molecules % 2 != 0) {
    throw ConfigError(s.path("molecules"), "must be even for the left/right coarse graining");
  }
  if (members == 0) throw ConfigError(s.path("ensemble"), "must be positive");

  std::vector<double> grid = config.sample_times;
  if (grid.empty()) {
    for (int i = 0; i <= 100; ++i) grid.push_back(gas.t_max * i / 100.0);
  }
  for (double t : crosscheck_times) {
    if (!(t >= 0.0)) throw ConfigError(s.path("crosscheck_times"), "times must be >= 0");
  }
  std::vector<double> times = grid;
  times.insert(times.end(), crosscheck_times.begin(), crosscheck_times.end());
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  const auto index_of = [&](double t) {
    return static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) - times.begin());
  };

  gas::EnsembleOptions options;
  options.members = members;
  options.sample_times = times;
  options.threads = threads;
  const gas::EnsembleResult ens = gas::simulate_ensemble(gas, options);

  const std::size_t n = gas.initial_excited;
  const std::size_t big_n = gas.molecules;
  const std::size_t labels = gas::left_half_labels(gas);
  const double mean_k_expected =
      static_cast<double>(n) * static_cast<double>(big_n / 2) / static_cast<double>(big_n);
  double s_max = -1.0;
  for (std::size_t k = 0; k < labels; ++k) {
    if (n - k <= big_n / 2) s_max = std::max(s_max, gas::macrostate_entropy(k, n, big_n));
  }

  double max_k_dev = 0.0;
  double min_entropy_ratio = 1.0;
  std::size_t late_samples = 0;
  for (const auto& pt : ens.series) {
    if (pt.t < equilibrium_after) continue;
    ++late_samples;
    max_k_dev = std::max(max_k_dev, std::abs(pt.mean_k - mean_k_expected));
    const double ratio = s_max > 0.0 ? pt.mean_macro_entropy / s_max : 1.0;
    min_entropy_ratio = std::min(min_entropy_ratio, ratio);
  }
  if (late_samples == 0) {
    throw ConfigError(s.path("equilibrium_after"), "no sample times at or after this time");
  }

  const double expected_rate = (n == 0 || n == big_n)
                                   ? 0.0
                                   : static_cast<double>(n) * gas.decay_rate;
  const double observed_rate = static_cast<double>(ens.total_events) /
                               (static_cast<double>(members) * gas.t_max);

  // Cross-prediction: empirical k-chain rates propagated by the master equation.
  const gas::EmpiricalRates rates = ens.rates.estimate();
  const auto generator = master::build_master_operator(rates.rates);
  const gas::GasState initial = gas::init_gas(gas);
  const auto p0 = ProbabilityVector::point_mass(labels, gas::left_half_count(initial));
  struct Cross {
    double t;
    std::vector<double> ensemble;
    ProbabilityVector predicted;
    double tv;
  };
  std::vector<Cross> cross;
  double max_tv = 0.0;
  for (double t : crosscheck_times) {
    const auto& pt = ens.series[index_of(t)];
    std::vector<double> freq(labels);
    for (std::size_t k = 0; k < labels; ++k) {
      freq[k] = static_cast<double>(pt.k_counts[k]) / static_cast<double>(members);
    }
    auto predicted = master::evolve_probabilities(generator, p0, t);
    const double tv = total_variation(ProbabilityVector(freq), predicted);
    max_tv = std::max(max_tv, tv);
    cross.push_back({t, std::move(freq), std::move(predicted), tv});
  }

  ReportBuilder report(config);
  report.param("molecules", static_cast<double>(big_n));
  report.param("initial_excited", static_cast<double>(n));
  report.param("decay_rate", gas.decay_rate);
  report.param("delay", gas.absorption_delay());
  report.param("t_max", gas.t_max);
  report.param("ensemble", static_cast<double>(members));
  report.param("coupling", coupling_file ? *coupling_file : std::string("uniform"));
  report.param("equilibrium_after", equilibrium_after);
  report.param("crosscheck_times", join(crosscheck_times));
  report.param("hypergeometric_mean_k", mean_k_expected);
  report.param("max_macro_entropy", s_max);
  report.param("total_events", static_cast<double>(ens.total_events));
  report.param("unvisited_labels", static_cast<double>(rates.unvisited.size()));

  report.at_most("ledger_audit", static_cast<double>(ens.audit.total_violations()), 0.0,
                 "conservation, ordering and precondition violations over all ledgers");
  report.at_most("mean_k_equilibrium", max_k_dev, mean_k_tolerance,
                 "max |mean k - hypergeometric mean| for t >= equilibrium_after");
  report.at_least("macro_entropy_near_max", min_entropy_ratio, entropy_fraction,
                  "min mean S_macro / S_max for t >= equilibrium_after");
  if (expected_rate > 0.0) {
    report.at_most("event_density", std::abs(observed_rate - expected_rate) / expected_rate,
                   density_tolerance, "relative deviation of events per unit time from n * rate");
  } else {
    report.at_most("event_density", observed_rate, 0.0,
                   "no absorber or no emitter: no transaction may occur");
  }
  report.at_most("master_equation_crosscheck", max_tv, tv_tolerance,
                 "max total-variation distance, ensemble k histogram vs master-equation prediction");

  OutputSink sink(config);
  sink.write("ensemble_series.csv", [&](std::ostream& out) {
    out << "t,ensemble_entropy,mean_k,mean_S_macro\n";
    for (const auto& pt : ens.series) {
      out << format_real(pt.t) << ',' << format_real(pt.ensemble_entropy) << ','
          << format_real(pt.mean_k) << ',' << format_real(pt.mean_macro_entropy) << '\n';
    }
  });
  sink.write("ledger_member0.csv",
             [&](std::ostream& out) { gas::write_ledger_csv(out, ens.first_member.ledger.events()); });
  sink.write("trajectory_member0.csv",
             [&](std::ostream& out) { gas::write_trajectory_csv(out, ens.first_member.trajectory); });
  sink.write("empirical_rates.csv", [&](std::ostream& out) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < labels; ++k) names.push_back("k" + std::to_string(k));
    master::write_rate_matrix_csv(out, master::LabeledRates{names, rates.rates});
  });
  sink.write("crosscheck.csv", [&](std::ostream& out) {
    out << "t,k,ensemble,predicted\n";
    for (const auto& c : cross) {
      for (std::size_t k = 0; k < labels; ++k) {
        out << format_real(c.t) << ',' << k << ',' << format_real(c.ensemble[k]) << ','
            << format_real(c.predicted[k]) << '\n';
      }
    }
  });
  return report.finish(sink);
}

}  // namespace stosszahl::experiment::detail
