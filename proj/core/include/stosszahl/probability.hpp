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
#include <span>
#include <vector>

#include "stosszahl/common.hpp"

namespace stosszahl {

/// Nonnegative weights summing to one.
///
/// Entries in [-1e-12, 0) are clamped to zero on construction; anything more
/// negative, or a sum off by more than 1e-10, is rejected.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);
  explicit ProbabilityVector(const RVector& values);

  static ProbabilityVector uniform(std::size_t size);
  static ProbabilityVector point_mass(std::size_t size, std::size_t index);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  RVector to_eigen() const;

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  std::vector<double> values_;
};

/// -x ln x with the 0 ln 0 = 0 convention.
double entropy_term(double x);

/// Sum of entropy_term over `weights`, accumulated in ascending order so that
/// equal multisets give bit-identical results.
double entropy_of_weights(std::span<const double> weights);

/// Shannon entropy in nats.
double shannon_entropy(const ProbabilityVector& p);

/// Total-variation distance, half the L1 difference.
double total_variation(const ProbabilityVector& p, const ProbabilityVector& q);

}  // namespace stosszahl
