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
#include <limits>
#include <sstream>
#include <vector>

#include "stosszahl/measurement.hpp"
#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::gas {

std::optional<TransactionEvent> next_event(const GasState& state, const GasConfig& config,
                                           Rng& rng) {
  const std::size_t n = state.quanta();
  const std::size_t molecules = state.molecules();
  // An offer needs at least one responding absorber.
  if (n == 0 || n == molecules) return std::nullopt;

  const double t_emit = state.time() + exponential_wait(rng, static_cast<double>(n) *
                                                                 config.decay_rate);

  const std::size_t pick = uniform_index(rng, n);
  std::size_t emitter = 0;
  std::vector<std::size_t> absorbers;
  absorbers.reserve(molecules - n);
  for (std::size_t id = 0, seen = 0; id < molecules; ++id) {
    if (state.excited(id)) {
      if (seen++ == pick) emitter = id;
    } else {
      absorbers.push_back(id);
    }
  }

  std::vector<double> weights(absorbers.size(), 1.0);
  if (config.coupling) {
    for (std::size_t i = 0; i < absorbers.size(); ++i) {
      weights[i] = (*config.coupling)(static_cast<Index>(emitter),
                                      static_cast<Index>(absorbers[i]));
    }
  }
  double total = 0.0;
  for (double w : weights) {
    if (w > kNegligibleWeight) total += w;
  }
  if (!(total > 0.0)) {
    std::ostringstream msg;
    msg << "next_event: emitter " << emitter << " has zero coupling to every ground-state molecule";
    throw InvalidArgument(msg.str());
  }
  const std::size_t winner = collapse_sample(weights, rng);

  TransactionEvent ev;
  ev.emitter = emitter;
  ev.absorber = absorbers[winner];
  ev.t_emit = t_emit;
  ev.t_absorb = t_emit + config.absorption_delay();
  ev.winner_weight = weights[winner] / total;
  ev.confirmation_set_size = absorbers.size();
  return ev;
}

GasState apply_event(GasState state, const TransactionEvent& event) {
  const std::size_t molecules = state.molecules();
  std::ostringstream msg;
  if (event.emitter >= molecules || event.absorber >= molecules) {
    msg << "apply_event: molecule id out of range";
  } else if (event.emitter == event.absorber) {
    msg << "apply_event: emitter and absorber coincide (" << event.emitter << ")";
  } else if (!state.excited(event.emitter)) {
    msg << "apply_event: emitter " << event.emitter << " is not excited";
  } else if (state.excited(event.absorber)) {
    msg << "apply_event: absorber " << event.absorber << " is already excited";
  } else if (!(event.t_emit < event.t_absorb)) {
    msg << "apply_event: absorption at " << event.t_absorb << " does not follow emission at "
        << event.t_emit;
  } else if (event.t_emit < state.time()) {
    msg << "apply_event: emission at " << event.t_emit << " precedes the state time "
        << state.time();
  }
  if (!msg.str().empty()) throw InvariantViolation(msg.str());

  state.levels_[event.emitter] = Level::ground;
  state.levels_[event.absorber] = Level::excited;
  state.time_ = event.t_absorb;
  return state;
}

namespace {

TrajectoryRecord record_of(const GasState& state, double t) {
  const std::size_t k = left_half_count(state);
  const double s = state.molecules() % 2 == 0
                       ? macrostate_entropy(k, state.quanta(), state.molecules())
                       : std::numeric_limits<double>::quiet_NaN();
  return TrajectoryRecord{t, state.quanta(), k, s};
}

}  // namespace

RunResult run(const GasConfig& config) {
  Rng rng = make_rng(config.seed);
  return run(config, rng);
}

RunResult run(const GasConfig& config, Rng& rng) {
  GasState state = init_gas(config);
  Trajectory trajectory;
  EventLedger ledger;
  trajectory.append(record_of(state, state.time()));

  while (auto ev = next_event(state, config, rng)) {
    if (ev->t_absorb > config.t_max) break;
    ledger.append(*ev);
    state = apply_event(std::move(state), *ev);
    trajectory.append(record_of(state, state.time()));
  }
  if (trajectory.records().back().t < config.t_max) {
    trajectory.append(record_of(state, config.t_max));
  }
  return RunResult{std::move(trajectory), std::move(ledger), std::move(state)};
}

}  // namespace stosszahl::gas
