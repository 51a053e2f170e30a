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
#include <limits>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::gas {

namespace {

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  throw InvalidArgument("GasConfig." + field + ": " + why);
}

double log_binomial(std::size_t n, std::size_t k) {
  using boost::math::lgamma;
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  return lgamma(nn + 1.0) - lgamma(kk + 1.0) - lgamma(nn - kk + 1.0);
}

}  // namespace

double GasConfig::absorption_delay() const {
  return delay ? *delay : 1e-6 / decay_rate;
}

void GasConfig::validate() const {
  if (molecules == 0) reject("molecules", "must be at least 1");
  if (initial_excited > molecules) reject("initial_excited", "exceeds the molecule count");
  if (!excited_ids.empty()) {
    if (excited_ids.size() != initial_excited) {
      reject("excited_ids", "lists " + std::to_string(excited_ids.size()) +
                                " molecules but initial_excited is " +
                                std::to_string(initial_excited));
    }
    std::vector<std::size_t> sorted = excited_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      reject("excited_ids", "contains duplicates");
    }
    if (sorted.back() >= molecules) reject("excited_ids", "id out of range");
  }
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
    reject("decay_rate", "must be positive and finite");
  }
  const double tau = absorption_delay();
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    reject("delay", "must be strictly positive so that emission precedes absorption");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) reject("t_max", "must be finite and >= 0");
  if (!(t_max + tau > t_max)) {
    reject("delay", "is below the floating-point resolution at t_max");
  }
  if (coupling) {
    const auto n = static_cast<Index>(molecules);
    if (coupling->rows() != n || coupling->cols() != n) {
      reject("coupling", "table must be molecules x molecules");
    }
    if (!coupling->allFinite() || coupling->minCoeff() < 0.0) {
      reject("coupling", "weights must be finite and nonnegative");
    }
  }
}

GasState::GasState(std::vector<Level> levels, double time)
    : levels_(std::move(levels)), time_(time) {
  if (levels_.empty()) throw InvalidArgument("GasState: no molecules");
  quanta_ = static_cast<std::size_t>(std::count(levels_.begin(), levels_.end(), Level::excited));
}

bool GasState::quanta_consistent() const {
  return quanta_ ==
         static_cast<std::size_t>(std::count(levels_.begin(), levels_.end(), Level::excited));
}

void EventLedger::append(const TransactionEvent& event) {
  if (!(event.t_emit < event.t_absorb)) {
    throw InvariantViolation("EventLedger: absorption does not follow emission");
  }
  if (event.emitter == event.absorber) {
    throw InvariantViolation("EventLedger: emitter and absorber coincide");
  }
  if (!(event.winner_weight > 0.0 && event.winner_weight <= 1.0)) {
    throw InvariantViolation("EventLedger: winner weight outside (0, 1]");
  }
  if (!events_.empty() && event.t_emit < events_.back().t_emit) {
    throw InvariantViolation("EventLedger: emission times must not decrease");
  }
  events_.push_back(event);
}

void Trajectory::append(const TrajectoryRecord& record) {
  if (!records_.empty() && !(record.t > records_.back().t)) {
    throw InvariantViolation("Trajectory: record times must strictly increase");
  }
  records_.push_back(record);
}

const TrajectoryRecord& Trajectory::at(double t) const {
  if (records_.empty() || t < records_.front().t) {
    throw InvalidArgument("Trajectory::at: time precedes the trajectory");
  }
  const auto it = std::upper_bound(records_.begin(), records_.end(), t,
                                   [](double v, const TrajectoryRecord& r) { return v < r.t; });
  return *std::prev(it);
}

GasState init_gas(const GasConfig& config) {
  config.validate();
  std::vector<Level> levels(config.molecules, Level::ground);
  if (config.excited_ids.empty()) {
    std::fill_n(levels.begin(), config.initial_excited, Level::excited);
  } else {
    for (std::size_t id : config.excited_ids) levels[id] = Level::excited;
  }
  return GasState(std::move(levels), 0.0);
}

std::size_t left_half_count(const GasState& state) {
  const std::size_t half = state.molecules() / 2;
  const auto& levels = state.levels();
  return static_cast<std::size_t>(
      std::count(levels.begin(), levels.begin() + static_cast<std::ptrdiff_t>(half),
                 Level::excited));
}

double macrostate_entropy(std::size_t k, std::size_t quanta, std::size_t molecules) {
  if (molecules == 0 || molecules % 2 != 0) {
    throw InvalidArgument("macrostate_entropy: molecule count must be even and positive");
  }
  const std::size_t half = molecules / 2;
  if (quanta > molecules || k > quanta || k > half || quanta - k > half) {
    std::ostringstream msg;
    msg << "macrostate_entropy: no macrostate with k = " << k << " of " << quanta
        << " quanta in the left half of " << molecules << " molecules";
    throw InvalidArgument(msg.str());
  }
  return log_binomial(half, k) + log_binomial(half, quanta - k);
}

double macrostate_entropy(std::size_t k, const GasConfig& config) {
  return macrostate_entropy(k, config.initial_excited, config.molecules);
}

}  // namespace stosszahl::gas
