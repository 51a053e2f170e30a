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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stosszahl/common.hpp"
#include "stosszahl/master_equation.hpp"
#include "stosszahl/random.hpp"

namespace stosszahl::gas {

enum class Level : std::uint8_t { ground = 0, excited = 1 };

struct TransactionEvent;

/// Parameters of one gas of identical two-level molecules.
///
/// Molecules exchange single quanta: an excited molecule decays at
/// `decay_rate` and its quantum lands on exactly one ground-state molecule
/// after `delay`. With no coupling table every ground-state molecule is an
/// equally weighted absorber; a table entry (e, a) gives the relative weight
/// of absorber a for emitter e.
struct GasConfig {
  std::size_t molecules = 0;
  std::size_t initial_excited = 0;
  /// Explicit initial layout. Empty selects molecules 0 .. initial_excited-1.
  std::vector<std::size_t> excited_ids;
  double decay_rate = 1.0;
  /// Emission-to-absorption delay. Unset means 1e-6 / decay_rate.
  std::optional<double> delay;
  std::optional<RMatrix> coupling;
  double t_max = 0.0;
  std::uint64_t seed = 0;

  double absorption_delay() const;
  /// Throws InvalidArgument naming the offending field.
  void validate() const;
};

class GasState {
 public:
  GasState(std::vector<Level> levels, double time);

  std::size_t molecules() const noexcept { return levels_.size(); }
  Level level(std::size_t id) const { return levels_.at(id); }
  bool excited(std::size_t id) const { return level(id) == Level::excited; }
  double time() const noexcept { return time_; }
  std::size_t quanta() const noexcept { return quanta_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  /// Recounts excited molecules; true iff the cached count agrees.
  bool quanta_consistent() const;

 private:
  friend GasState apply_event(GasState state, const TransactionEvent& event);

  std::vector<Level> levels_;
  double time_;
  std::size_t quanta_;
};

/// One completed transfer of a quantum from emitter to absorber.
struct TransactionEvent {
  std::size_t emitter = 0;
  std::size_t absorber = 0;
  double t_emit = 0.0;
  double t_absorb = 0.0;
  double winner_weight = 0.0;  // normalized weight of the chosen absorber
  std::size_t confirmation_set_size = 0;

  friend bool operator==(const TransactionEvent&, const TransactionEvent&) = default;
};

/// Append-only record of transactions. Appending enforces
/// t_emit < t_absorb, emitter != absorber, winner_weight in (0, 1] and
/// non-decreasing emission times.
class EventLedger {
 public:
  void append(const TransactionEvent& event);

  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  std::span<const TransactionEvent> events() const noexcept { return events_; }
  const TransactionEvent& operator[](std::size_t i) const { return events_[i]; }

 private:
  std::vector<TransactionEvent> events_;
};

struct TrajectoryRecord {
  double t;
  std::size_t quanta;
  std::size_t left_count;
  double macro_entropy;  // NaN when the molecule count is odd
};

/// Piecewise-constant path of the coarse-grained state. Times strictly increase.
class Trajectory {
 public:
  void append(const TrajectoryRecord& record);

  std::span<const TrajectoryRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  /// The record in force at time t (the last one with record.t <= t).
  const TrajectoryRecord& at(double t) const;

 private:
  std::vector<TrajectoryRecord> records_;
};

GasState init_gas(const GasConfig& config);

/// Samples the next transaction, or nullopt when no emitter/absorber pair
/// exists (every molecule excited, or none).
///
/// Each excited molecule carries an independent exponential clock of rate
/// `decay_rate`, so the first decay arrives after Exp(quanta * rate) and is
/// equally likely to be any excited molecule. The confirmation set is every
/// ground-state molecule at the emission instant; the winner is drawn by
/// collapse_sample over the (normalized) coupling weights.
std::optional<TransactionEvent> next_event(const GasState& state, const GasConfig& config,
                                           Rng& rng);

/// Moves the quantum from emitter to absorber and advances time to t_absorb.
/// Throws InvariantViolation if the emitter is not excited, the absorber is
/// not in the ground state, or the event lies in the state's past.
GasState apply_event(GasState state, const TransactionEvent& event);

/// Number of excited molecules with id < molecules / 2.
std::size_t left_half_count(const GasState& state);

/// ln[C(N/2, k) C(N/2, n - k)], the log-multiplicity of the macrostate with k
/// of the n quanta in the left half of N molecules. Requires N even and the
/// macrostate to exist.
double macrostate_entropy(std::size_t k, std::size_t quanta, std::size_t molecules);
double macrostate_entropy(std::size_t k, const GasConfig& config);

struct RunResult {
  Trajectory trajectory;
  EventLedger ledger;
  GasState final_state;
};

/// Simulates until t_max or until no transaction can form. Events whose
/// absorption would land after t_max are discarded. Uses make_rng(config.seed).
RunResult run(const GasConfig& config);
RunResult run(const GasConfig& config, Rng& rng);

struct AuditViolation {
  std::size_t event_index;
  std::string kind;
  std::string detail;
};

/// Outcome of replaying a ledger. Without an initial state, molecule levels
/// are inferred from their first appearance and conservation is checked only
/// through the emitter/absorber precondition chain.
struct AuditReport {
  std::size_t events = 0;
  std::size_t ordering_violations = 0;      // t_e >= t_a or t_e decreasing
  std::size_t precondition_violations = 0;  // emitter not excited / absorber not ground
  std::size_t record_violations = 0;        // self-transfer, bad weight, bad id
  std::size_t conservation_violations = 0;  // quanta count drifted during replay
  std::vector<AuditViolation> violations;   // first kMaxListed, in ledger order

  static constexpr std::size_t kMaxListed = 100;

  std::size_t total_violations() const noexcept {
    return ordering_violations + precondition_violations + record_violations +
           conservation_violations;
  }
  bool clean() const noexcept { return total_violations() == 0; }
  void merge(const AuditReport& other);
};

AuditReport audit_ledger(std::span<const TransactionEvent> events,
                         const std::optional<GasState>& initial = std::nullopt);

/// Maps a gas state to a label in [0, labels).
using Partition = std::function<std::size_t(const GasState&)>;

/// Label = left_half_count.
Partition left_half_partition();
/// Number of labels used by left_half_partition for this configuration.
std::size_t left_half_labels(const GasConfig& config);

struct EmpiricalRates {
  master::RateMatrix rates;
  RMatrix transitions;            // observed label changes, (to, from)
  std::vector<double> dwell;      // time spent in each label
  std::vector<std::size_t> unvisited;  // labels with zero dwell; their columns are left at 0
};

/// Accumulates label dwell times and label-changing transitions over any
/// number of replayed ledgers. Merging is associative and commutative up to
/// floating-point summation order.
class RateEstimator {
 public:
  explicit RateEstimator(std::size_t labels);

  void observe(const GasState& initial, std::span<const TransactionEvent> events, double t_end,
               const Partition& partition);
  void merge(const RateEstimator& other);

  std::size_t labels() const noexcept { return dwell_.size(); }
  /// R(i, j) = transitions j -> i / dwell in j.
  EmpiricalRates estimate() const;

 private:
  RMatrix transitions_;
  std::vector<double> dwell_;
};

EmpiricalRates empirical_rates(const GasState& initial, std::span<const TransactionEvent> events,
                               const Partition& partition, std::size_t labels, double total_time);

struct EnsemblePoint {
  double t;
  double ensemble_entropy;  // Shannon entropy of the empirical k distribution
  double mean_k;
  double mean_macro_entropy;
  std::vector<std::size_t> k_counts;
};

struct EnsembleOptions {
  std::size_t members = 100;
  std::vector<double> sample_times;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct EnsembleResult {
  std::vector<EnsemblePoint> series;
  RateEstimator rates;
  AuditReport audit;
  std::size_t total_events = 0;
  RunResult first_member;
};

/// Runs `members` independent copies of the gas, member i seeded with
/// make_member_rng(config.seed, i). Results do not depend on `threads`.
EnsembleResult simulate_ensemble(const GasConfig& config, const EnsembleOptions& options);

/// Ensemble statistics of k at each sample time. Requires seeds >= 100.
std::vector<EnsemblePoint> ensemble_entropy_series(const GasConfig& config, std::size_t seeds,
                                                   std::span<const double> sample_times);

inline constexpr std::string_view kLedgerCsvHeader =
    "event_index,t_e,t_a,emitter,absorber,winner_weight,confirmation_set_size";
inline constexpr std::string_view kTrajectoryCsvHeader = "t,n,k,S_macro";

void write_ledger_csv(std::ostream& out, std::span<const TransactionEvent> events);
/// Parses a ledger CSV. Lines starting with '#' are skipped. Rows are returned
/// as written, without invariant checks; use audit_ledger on the result.
std::vector<TransactionEvent> read_ledger_csv(std::istream& in);
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace stosszahl::gas
