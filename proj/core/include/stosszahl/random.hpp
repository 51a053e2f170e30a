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
#include <random>

namespace stosszahl {

/// The project-wide random stream. std::mt19937_64 has a fully specified
/// output sequence, so a seed reproduces the same raw 64-bit words on every
/// conforming platform. All conversions below use only those words and
/// exact arithmetic, never the implementation-defined std distributions.
using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed);

/// Independent stream for ensemble member `member` of a run seeded `seed`.
Rng make_member_rng(std::uint64_t seed, std::uint64_t member);

/// Uniform on [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Uniform on the open interval (0, 1).
double uniform_open(Rng& rng);

/// Exponential waiting time with the given rate; strictly positive.
double exponential_wait(Rng& rng, double rate);

/// Uniform integer in [0, n). Requires n > 0.
std::size_t uniform_index(Rng& rng, std::size_t n);

}  // namespace stosszahl
