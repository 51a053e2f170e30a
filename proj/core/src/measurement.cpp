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

#include "stosszahl/measurement.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace stosszahl {

MeasurementBasis::MeasurementBasis(CMatrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() != columns_.cols() || columns_.rows() == 0) {
    throw InvalidArgument("MeasurementBasis: expected d column vectors of dimension d");
  }
  if (columns_.rows() > kMaxDimension) {
    throw InvalidArgument("MeasurementBasis: dimension exceeds the limit of 64");
  }
  const Index d = columns_.cols();
  const double gram_error =
      (columns_.adjoint() * columns_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(gram_error <= tol::kOrthonormal)) {
    std::ostringstream msg;
    msg << "MeasurementBasis: columns are not orthonormal, max |<X_i|X_j> - delta_ij| = "
        << gram_error;
    throw InvalidArgument(msg.str());
  }
}

MeasurementBasis MeasurementBasis::computational(Index dimension) {
  if (dimension <= 0) throw InvalidArgument("MeasurementBasis::computational: bad dimension");
  return MeasurementBasis(CMatrix::Identity(dimension, dimension));
}

MeasurementBasis MeasurementBasis::eigenbasis(const Observable& observable) {
  return MeasurementBasis(eig_hermitian(observable.matrix()).eigenvectors);
}

StateVector MeasurementBasis::vector(Index k) const {
  if (k < 0 || k >= dimension()) throw InvalidArgument("MeasurementBasis::vector: bad index");
  return StateVector(columns_.col(k));
}

namespace {
void require_dimension(Index got, const MeasurementBasis& basis, const char* what) {
  if (got != basis.dimension()) {
    std::ostringstream msg;
    msg << what << ": state has dimension " << got << ", basis has " << basis.dimension();
    throw InvalidArgument(msg.str());
  }
}
}  // namespace

ProbabilityVector born_weights(const StateVector& psi, const MeasurementBasis& basis) {
  require_dimension(psi.dimension(), basis, "born_weights");
  const CVector overlaps = basis.matrix().adjoint() * psi.amplitudes();
  return ProbabilityVector(RVector(overlaps.cwiseAbs2()));
}

ProbabilityVector basis_populations(const DensityMatrix& rho, const MeasurementBasis& basis) {
  require_dimension(rho.dimension(), basis, "basis_populations");
  const CMatrix& v = basis.matrix();
  const CMatrix in_basis = v.adjoint() * rho.matrix() * v;
  return ProbabilityVector(RVector(in_basis.diagonal().real()));
}

DensityMatrix process1(const DensityMatrix& rho, const MeasurementBasis& basis) {
  const RVector p = basis_populations(rho, basis).to_eigen();
  const CMatrix& v = basis.matrix();
  return DensityMatrix(v * p.cast<Complex>().asDiagonal() * v.adjoint());
}

DensityMatrix decohere(const DensityMatrix& rho, const MeasurementBasis& basis) {
  return process1(rho, basis);
}

std::size_t collapse_sample(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) throw InvalidArgument("collapse_sample: no outcomes");
  double total = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const double w = weights[k];
    if (!std::isfinite(w) || w < 0.0) {
      std::ostringstream msg;
      msg << "collapse_sample: weight " << k << " = " << w << " is not a nonnegative number";
      throw InvalidArgument(msg.str());
    }
    if (w > kNegligibleWeight) total += w;
  }
  if (!(total > 0.0)) throw InvalidArgument("collapse_sample: all weights are zero");

  const double target = uniform_unit(rng) * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (!(weights[k] > kNegligibleWeight)) continue;
    cumulative += weights[k];
    last_positive = k;
    if (target < cumulative) return k;
  }
  // target rounded onto the final edge of the CDF
  return last_positive;
}

std::size_t collapse_sample(const ProbabilityVector& weights, Rng& rng) {
  return collapse_sample(weights.values(), rng);
}

MeasurementResult measure(const StateVector& psi, const MeasurementBasis& basis, Rng& rng) {
  const ProbabilityVector weights = born_weights(psi, basis);
  const std::size_t k = collapse_sample(weights, rng);
  StateVector post = basis.vector(static_cast<Index>(k));
  CollapseOutcome outcome{k, density_from_pure(post), weights[k]};
  return MeasurementResult{std::move(outcome), std::move(post)};
}

}  // namespace stosszahl
