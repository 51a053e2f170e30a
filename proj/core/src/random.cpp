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

#include "stosszahl/random.hpp"

#include <cmath>

#include "stosszahl/common.hpp"

namespace stosszahl {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}

Rng make_rng(std::uint64_t seed) { return Rng(seed); }

Rng make_member_rng(std::uint64_t seed, std::uint64_t member) {
  // std::seed_seq's mixing algorithm is specified exactly by the standard.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(member), static_cast<std::uint32_t>(member >> 32)};
  return Rng(seq);
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * kTwoPow53Inv; }

double uniform_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * kTwoPow53Inv;
}

double exponential_wait(Rng& rng, double rate) {
  if (!(rate > 0.0)) throw InvalidArgument("exponential_wait: rate must be positive");
  return -std::log(uniform_open(rng)) / rate;
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform_index: empty range");
  const auto k = static_cast<std::size_t>(uniform_unit(rng) * static_cast<double>(n));
  return k < n ? k : n - 1;
}

}  // namespace stosszahl
