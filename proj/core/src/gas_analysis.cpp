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
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::gas {

void AuditReport::merge(const AuditReport& other) {
  for (const auto& v : other.violations) {
    if (violations.size() >= kMaxListed) break;
    violations.push_back({v.event_index + events, v.kind, v.detail});
  }
  events += other.events;
  ordering_violations += other.ordering_violations;
  precondition_violations += other.precondition_violations;
  record_violations += other.record_violations;
  conservation_violations += other.conservation_violations;
}

AuditReport audit_ledger(std::span<const TransactionEvent> events,
                         const std::optional<GasState>& initial) {
  enum class Known : std::uint8_t { unknown, ground, excited };
  AuditReport report;
  report.events = events.size();

  std::vector<Known> known;
  std::size_t expected_quanta = 0;
  std::size_t excited_now = 0;
  if (initial) {
    known.reserve(initial->molecules());
    for (Level l : initial->levels()) {
      known.push_back(l == Level::excited ? Known::excited : Known::ground);
    }
    expected_quanta = initial->quanta();
    excited_now = expected_quanta;
  }
  const auto note = [&](std::size_t i, std::size_t& counter, const char* kind,
                        const std::string& detail) {
    ++counter;
    if (report.violations.size() < AuditReport::kMaxListed) {
      report.violations.push_back({i, kind, detail});
    }
  };

  double previous_emit = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TransactionEvent& ev = events[i];
    if (!std::isfinite(ev.t_emit) || !std::isfinite(ev.t_absorb)) {
      note(i, report.record_violations, "record", "non-finite time");
      continue;
    }
    if (!(ev.t_emit < ev.t_absorb)) {
      note(i, report.ordering_violations, "ordering",
           "t_e = " + format_real(ev.t_emit) + " is not before t_a = " + format_real(ev.t_absorb));
    }
    if (ev.t_emit < previous_emit) {
      note(i, report.ordering_violations, "ordering", "emission time decreased");
    }
    previous_emit = std::max(previous_emit, ev.t_emit);
    if (!(ev.winner_weight > 0.0 && ev.winner_weight <= 1.0)) {
      note(i, report.record_violations, "record",
           "winner weight " + format_real(ev.winner_weight) + " outside (0, 1]");
    }
    if (ev.confirmation_set_size == 0) {
      note(i, report.record_violations, "record", "empty confirmation set");
    }
    if (ev.emitter == ev.absorber) {
      note(i, report.record_violations, "record", "emitter equals absorber");
      continue;
    }
    if (initial && (ev.emitter >= known.size() || ev.absorber >= known.size())) {
      note(i, report.record_violations, "record", "molecule id out of range");
      continue;
    }
    const std::size_t needed = std::max(ev.emitter, ev.absorber) + 1;
    if (known.size() < needed) known.resize(needed, Known::unknown);

    if (known[ev.emitter] == Known::ground) {
      note(i, report.precondition_violations, "precondition",
           "emitter " + std::to_string(ev.emitter) + " is not excited");
    }
    if (known[ev.absorber] == Known::excited) {
      note(i, report.precondition_violations, "precondition",
           "absorber " + std::to_string(ev.absorber) + " is already excited");
    }
    if (initial) {
      if (known[ev.emitter] == Known::excited) --excited_now;
      if (known[ev.absorber] != Known::excited) ++excited_now;
    }
    known[ev.emitter] = Known::ground;
    known[ev.absorber] = Known::excited;
    if (initial && excited_now != expected_quanta) {
      note(i, report.conservation_violations, "conservation",
           "quanta " + std::to_string(excited_now) + " != " + std::to_string(expected_quanta));
      expected_quanta = excited_now;  // report each drift once
    }
  }
  return report;
}

Partition left_half_partition() {
  return [](const GasState& s) { return left_half_count(s); };
}

std::size_t left_half_labels(const GasConfig& config) {
  return std::min(config.initial_excited, config.molecules / 2) + 1;
}

RateEstimator::RateEstimator(std::size_t labels)
    : transitions_(RMatrix::Zero(static_cast<Index>(labels), static_cast<Index>(labels))),
      dwell_(labels, 0.0) {
  if (labels == 0) throw InvalidArgument("RateEstimator: no labels");
}

void RateEstimator::observe(const GasState& initial, std::span<const TransactionEvent> events,
                            double t_end, const Partition& partition) {
  const auto checked = [&](const GasState& s) {
    const std::size_t label = partition(s);
    if (label >= labels()) {
      throw InvalidArgument("RateEstimator: partition label " + std::to_string(label) +
                            " out of range");
    }
    return label;
  };
  GasState state = initial;
  std::size_t label = checked(state);
  double t_prev = state.time();
  for (const TransactionEvent& ev : events) {
    if (ev.t_absorb > t_end) break;
    state = apply_event(std::move(state), ev);
    dwell_[label] += ev.t_absorb - t_prev;
    t_prev = ev.t_absorb;
    const std::size_t next = checked(state);
    if (next != label) {
      transitions_(static_cast<Index>(next), static_cast<Index>(label)) += 1.0;
      label = next;
    }
  }
  if (t_end > t_prev) dwell_[label] += t_end - t_prev;
}

void RateEstimator::merge(const RateEstimator& other) {
  if (other.labels() != labels()) throw InvalidArgument("RateEstimator::merge: label mismatch");
  transitions_ += other.transitions_;
  for (std::size_t j = 0; j < dwell_.size(); ++j) dwell_[j] += other.dwell_[j];
}

EmpiricalRates RateEstimator::estimate() const {
  const auto n = static_cast<Index>(labels());
  RMatrix rates = RMatrix::Zero(n, n);
  std::vector<std::size_t> unvisited;
  for (Index j = 0; j < n; ++j) {
    const double dwell = dwell_[static_cast<std::size_t>(j)];
    if (!(dwell > 0.0)) {
      unvisited.push_back(static_cast<std::size_t>(j));
      continue;
    }
    for (Index i = 0; i < n; ++i) {
      if (i != j) rates(i, j) = transitions_(i, j) / dwell;
    }
  }
  return EmpiricalRates{master::RateMatrix(std::move(rates)), transitions_, dwell_,
                        std::move(unvisited)};
}

EmpiricalRates empirical_rates(const GasState& initial, std::span<const TransactionEvent> events,
                               const Partition& partition, std::size_t labels, double total_time) {
  if (events.empty()) throw InvalidArgument("empirical_rates: empty ledger");
  RateEstimator estimator(labels);
  estimator.observe(initial, events, initial.time() + total_time, partition);
  return estimator.estimate();
}

namespace {

struct MemberSummary {
  std::vector<std::size_t> k_at;
  std::vector<double> macro_at;
  AuditReport audit;
  RateEstimator rates{1};
  std::size_t events = 0;
};

MemberSummary summarize(const GasConfig& config, const GasState& initial, const RunResult& run,
                        std::span<const double> times, std::size_t labels) {
  MemberSummary m;
  m.k_at.reserve(times.size());
  m.macro_at.reserve(times.size());
  for (double t : times) {
    const TrajectoryRecord& r = run.trajectory.at(t);
    m.k_at.push_back(r.left_count);
    m.macro_at.push_back(r.macro_entropy);
  }
  m.audit = audit_ledger(run.ledger.events(), initial);
  m.rates = RateEstimator(labels);
  m.rates.observe(initial, run.ledger.events(), config.t_max, left_half_partition());
  m.events = run.ledger.size();
  return m;
}

}  // namespace

EnsembleResult simulate_ensemble(const GasConfig& config, const EnsembleOptions& options) {
  config.validate();
  if (options.members == 0) throw InvalidArgument("simulate_ensemble: no members");
  for (double t : options.sample_times) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw InvalidArgument("simulate_ensemble: sample times must be finite and >= 0");
    }
  }
  const GasState initial = init_gas(config);
  const std::size_t labels = left_half_labels(config);
  const std::span<const double> times = options.sample_times;

  std::vector<MemberSummary> summaries(options.members);
  std::optional<RunResult> first;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < options.members; i = next++) {
        Rng rng = make_member_rng(config.seed, i);
        RunResult r = run(config, rng);
        summaries[i] = summarize(config, initial, r, times, labels);
        if (i == 0) first = std::move(r);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = options.members;
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(options.members)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  EnsembleResult result{{}, RateEstimator(labels), {}, 0, std::move(*first)};
  const auto members = static_cast<double>(options.members);
  for (std::size_t j = 0; j < times.size(); ++j) {
    EnsemblePoint point{times[j], 0.0, 0.0, 0.0, std::vector<std::size_t>(labels, 0)};
    double sum_k = 0.0;
    double sum_s = 0.0;
    for (const MemberSummary& m : summaries) {
      ++point.k_counts[m.k_at[j]];
      sum_k += static_cast<double>(m.k_at[j]);
      sum_s += m.macro_at[j];
    }
    std::vector<double> freq(labels);
    for (std::size_t k = 0; k < labels; ++k) {
      freq[k] = static_cast<double>(point.k_counts[k]) / members;
    }
    point.ensemble_entropy = shannon_entropy(ProbabilityVector(std::move(freq)));
    point.mean_k = sum_k / members;
    point.mean_macro_entropy = sum_s / members;
    result.series.push_back(std::move(point));
  }
  for (const MemberSummary& m : summaries) {
    result.rates.merge(m.rates);
    result.audit.merge(m.audit);
    result.total_events += m.events;
  }
  return result;
}

std::vector<EnsemblePoint> ensemble_entropy_series(const GasConfig& config, std::size_t seeds,
                                                   std::span<const double> sample_times) {
  if (seeds < 100) {
    throw InvalidArgument("ensemble_entropy_series: at least 100 seeds are required");
  }
  EnsembleOptions options;
  options.members = seeds;
  options.sample_times.assign(sample_times.begin(), sample_times.end());
  return simulate_ensemble(config, options).series;
}

}  // namespace stosszahl::gas
