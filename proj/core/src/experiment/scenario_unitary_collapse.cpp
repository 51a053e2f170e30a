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
#include <numbers>

#include "scenarios.hpp"
#include "stosszahl/measurement.hpp"
#include "stosszahl/quantum_state.hpp"
#include "stosszahl/random.hpp"

namespace stosszahl::experiment {

namespace {

CVector bloch_ket(double polar) {
  CVector v(2);
  v << std::cos(polar / 2.0), std::sin(polar / 2.0);
  return v;
}

bool on_axis(double polar) { return std::abs(std::sin(polar)) < 1e-12; }

}  // namespace

UnitaryCollapseResult unitary_vs_collapse(const UnitaryCollapseParams& params) {
  if (!(params.gap != 0.0) || !std::isfinite(params.gap)) {
    throw InvalidArgument("unitary_vs_collapse: gap must be nonzero");
  }
  if (!(params.collapse_rate > 0.0)) {
    throw InvalidArgument("unitary_vs_collapse: collapse rate must be positive");
  }
  if (!(params.t_end > 0.0)) throw InvalidArgument("unitary_vs_collapse: t_end must be positive");
  if (params.unitary_steps == 0 || params.members == 0 ||
      (params.sample_times.empty() && params.samples < 2)) {
    throw InvalidArgument("unitary_vs_collapse: need steps >= 1, members >= 1, samples >= 2");
  }
  if (on_axis(params.initial_angle)) {
    throw InvalidArgument("unitary_vs_collapse: the initial state is an energy eigenstate");
  }
  if (on_axis(params.measurement_angle)) {
    throw InvalidArgument("unitary_vs_collapse: the measurement basis commutes with H");
  }

  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 0) = 0.5 * params.gap;
  h(1, 1) = -0.5 * params.gap;
  const UnitaryPropagator propagator{Hamiltonian(h)};

  const DensityMatrix rho0 = density_from_pure(StateVector::normalized(bloch_ket(params.initial_angle)));
  CMatrix axes(2, 2);
  axes.col(0) = bloch_ket(params.measurement_angle);
  axes.col(1) = bloch_ket(params.measurement_angle + std::numbers::pi);
  const MeasurementBasis basis(axes);

  UnitaryCollapseResult result;

  // Unitary only: step the same state forward repeatedly.
  const double s0 = vn_entropy(rho0);
  const double dt = params.t_end / static_cast<double>(params.unitary_steps);
  DensityMatrix rho = rho0;
  result.unitary_times.push_back(0.0);
  result.unitary_entropy.push_back(s0);
  for (std::size_t i = 1; i <= params.unitary_steps; ++i) {
    rho = propagator.evolve(rho, dt);
    const double s = vn_entropy(rho);
    result.unitary_times.push_back(dt * static_cast<double>(i));
    result.unitary_entropy.push_back(s);
    result.unitary_max_drift = std::max(result.unitary_max_drift, std::abs(s - s0));
  }

  // Unitary segments interrupted by measurement transitions at Poisson times.
  if (params.sample_times.empty()) {
    for (std::size_t j = 0; j < params.samples; ++j) {
      result.sample_times.push_back(j + 1 == params.samples
                                        ? params.t_end
                                        : params.t_end * static_cast<double>(j) /
                                              static_cast<double>(params.samples - 1));
    }
  } else {
    result.sample_times = params.sample_times;
  }
  const std::size_t samples = result.sample_times.size();
  std::vector<double> entropy_sum(samples, 0.0);
  std::vector<double> purity_sum(samples, 0.0);
  std::size_t collapses = 0;
  for (std::size_t m = 0; m < params.members; ++m) {
    Rng rng = make_member_rng(params.seed, m);
    DensityMatrix anchor = rho0;
    double t_anchor = 0.0;
    double t_next = exponential_wait(rng, params.collapse_rate);
    for (std::size_t j = 0; j < samples; ++j) {
      const double t = result.sample_times[j];
      while (t_next <= t) {
        anchor = decohere(propagator.evolve(anchor, t_next - t_anchor), basis);
        t_anchor = t_next;
        t_next += exponential_wait(rng, params.collapse_rate);
        ++collapses;
      }
      const DensityMatrix now = propagator.evolve(anchor, t - t_anchor);
      entropy_sum[j] += vn_entropy(now);
      purity_sum[j] += purity(now);
    }
  }
  const auto members = static_cast<double>(params.members);
  for (std::size_t j = 0; j < samples; ++j) {
    result.collapse_mean_entropy.push_back(entropy_sum[j] / members);
    result.collapse_mean_purity.push_back(purity_sum[j] / members);
  }
  result.mean_collapses = static_cast<double>(collapses) / members;
  return result;
}

namespace detail {

RunReport run_unitary_collapse(const ScenarioConfig& config) {
  require_sections(config, {"unitary_collapse"});
  const SectionReader s(config.parameters, "unitary_collapse");
  UnitaryCollapseParams p;
  p.gap = s.real("gap", p.gap);
  p.collapse_rate = s.real("collapse_rate", p.collapse_rate);
  p.t_end = s.real("t_end", p.t_end);
  p.unitary_steps = s.count("unitary_steps", p.unitary_steps);
  p.members = s.count("members", p.members);
  p.initial_angle = s.real("initial_angle", p.initial_angle);
  p.measurement_angle = s.real("measurement_angle", p.measurement_angle);
  const double drift_tolerance = s.real("drift_tolerance", 1e-8);
  const double entropy_fraction = s.real("entropy_fraction", 0.95);
  config.parameters.reject_unused();
  p.seed = config.seed;
  p.sample_times = config.sample_times;

  UnitaryCollapseResult r;
  try {
    r = unitary_vs_collapse(p);
  } catch (const InvalidArgument& e) {
    throw ConfigError("unitary_collapse", e.what());
  }

  ReportBuilder report(config);
  report.param("gap", p.gap);
  report.param("collapse_rate", p.collapse_rate);
  report.param("t_end", p.t_end);
  report.param("unitary_steps", static_cast<double>(p.unitary_steps));
  report.param("members", static_cast<double>(p.members));
  report.param("initial_angle", p.initial_angle);
  report.param("measurement_angle", p.measurement_angle);
  report.param("mean_collapses", r.mean_collapses);

  const double ln2 = std::numbers::ln2;
  double max_entropy = 0.0;
  for (double v : r.collapse_mean_entropy) max_entropy = std::max(max_entropy, v);
  report.at_most("unitary_entropy_drift", r.unitary_max_drift, drift_tolerance,
                 "max |S_VN(t) - S_VN(0)| over the unitary steps");
  report.at_least("collapse_entropy_final", r.collapse_mean_entropy.back(), entropy_fraction * ln2,
                  "ensemble-mean S_VN at t_end versus fraction of ln 2");
  report.at_most("collapse_entropy_bounded", max_entropy, ln2 + 1e-9,
                 "ensemble-mean S_VN never exceeds ln 2");

  OutputSink sink(config);
  sink.write("unitary_branch.csv", [&](std::ostream& out) {
    out << "t,S_VN\n";
    for (std::size_t i = 0; i < r.unitary_times.size(); ++i) {
      out << format_real(r.unitary_times[i]) << ',' << format_real(r.unitary_entropy[i]) << '\n';
    }
  });
  sink.write("collapse_branch.csv", [&](std::ostream& out) {
    out << "t,S_VN_mean,purity_mean\n";
    for (std::size_t i = 0; i < r.sample_times.size(); ++i) {
      out << format_real(r.sample_times[i]) << ',' << format_real(r.collapse_mean_entropy[i])
          << ',' << format_real(r.collapse_mean_purity[i]) << '\n';
    }
  });
  return report.finish(sink);
}

}  // namespace detail
}  // namespace stosszahl::experiment
