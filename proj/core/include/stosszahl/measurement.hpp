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

#include "stosszahl/common.hpp"
#include "stosszahl/probability.hpp"
#include "stosszahl/quantum_state.hpp"
#include "stosszahl/random.hpp"

namespace stosszahl {

/// Orthonormal basis {|X_i>}, stored as the columns of a unitary matrix.
class MeasurementBasis {
 public:
  /// Rejects columns whose Gram matrix differs from identity by more than 1e-10.
  explicit MeasurementBasis(CMatrix columns);

  static MeasurementBasis computational(Index dimension);
  /// Eigenvectors of `observable`, ordered by ascending eigenvalue.
  static MeasurementBasis eigenbasis(const Observable& observable);

  Index dimension() const noexcept { return columns_.cols(); }
  const CMatrix& matrix() const noexcept { return columns_; }
  StateVector vector(Index k) const;

 private:
  CMatrix columns_;
};

/// |<X_k|psi>|^2 for every basis element.
ProbabilityVector born_weights(const StateVector& psi, const MeasurementBasis& basis);

/// <X_k|rho|X_k> for every basis element.
ProbabilityVector basis_populations(const DensityMatrix& rho, const MeasurementBasis& basis);

/// The measurement transition: rho -> sum_i <X_i|rho|X_i> |X_i><X_i|.
///
/// All coherence between basis elements is removed. For a pure input this is
/// sum_i |<psi|X_i>|^2 |X_i><X_i|. The map is many-to-one and never lowers
/// the von Neumann entropy.
DensityMatrix process1(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Same map as process1, named for its role inside longer evolutions.
DensityMatrix decohere(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Weights at or below this value are never selected.
inline constexpr double kNegligibleWeight = 1e-15;

/// Draws index k with probability weights[k] / sum(weights) by inverse CDF
/// over ascending index. Consumes exactly one word from `rng`.
///
/// Accepts unnormalized nonnegative weights; rejects negative entries and
/// weight vectors with no entry above kNegligibleWeight.
std::size_t collapse_sample(std::span<const double> weights, Rng& rng);
std::size_t collapse_sample(const ProbabilityVector& weights, Rng& rng);

struct CollapseOutcome {
  std::size_t index;
  DensityMatrix projector;  // |X_k><X_k|
  double weight;            // Born weight of the actualized outcome
};

struct MeasurementResult {
  CollapseOutcome outcome;
  StateVector post_state;
};

/// Full two-step measurement: Born weights, then a sampled collapse onto one
/// basis element.
MeasurementResult measure(const StateVector& psi, const MeasurementBasis& basis, Rng& rng);

}  // namespace stosszahl
