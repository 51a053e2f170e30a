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

#include <span>

#include "stosszahl/common.hpp"
#include "stosszahl/linalg.hpp"
#include "stosszahl/probability.hpp"

namespace stosszahl {

/// Normalized ket. Dimension is capped at kMaxDimension.
class StateVector {
 public:
  /// Rejects amplitudes whose squared norm differs from 1 by more than 1e-10.
  explicit StateVector(CVector amplitudes);

  /// Rescales `amplitudes` to unit norm. Rejects the zero vector.
  static StateVector normalized(CVector amplitudes);
  static StateVector basis(Index dimension, Index index);

  Index dimension() const noexcept { return amplitudes_.size(); }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](Index i) const { return amplitudes_(i); }

 private:
  CVector amplitudes_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10), trace (1e-10) and the smallest eigenvalue
  /// (>= -1e-10). The stored matrix is the Hermitian part of the input.
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix maximally_mixed(Index dimension);
  /// diag(p) in the computational basis.
  static DensityMatrix diagonal(const ProbabilityVector& p);

  Index dimension() const noexcept { return entries_.rows(); }
  const CMatrix& matrix() const noexcept { return entries_; }
  Complex operator()(Index i, Index j) const { return entries_(i, j); }

 private:
  CMatrix entries_;
};

namespace detail {
struct HamiltonianTag;
struct ObservableTag;
}  // namespace detail

/// Hermitian operator, tagged so that Hamiltonians and observables do not mix.
template <class Tag>
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix entries);

  static HermitianOperator identity(Index dimension) {
    return HermitianOperator(CMatrix::Identity(dimension, dimension));
  }

  Index dimension() const noexcept { return entries_.rows(); }
  const CMatrix& matrix() const noexcept { return entries_; }

 private:
  CMatrix entries_;
};

/// Energy operator with hbar = 1.
using Hamiltonian = HermitianOperator<detail::HamiltonianTag>;
using Observable = HermitianOperator<detail::ObservableTag>;

extern template class HermitianOperator<detail::HamiltonianTag>;
extern template class HermitianOperator<detail::ObservableTag>;

/// exp(-iHt) from the spectrum of H, diagonalized once.
///
/// Density matrices move as U rho U^H; observables move the other way,
/// U^H O U, so that Tr(rho(t) O) = Tr(rho O(t)).
class UnitaryPropagator {
 public:
  explicit UnitaryPropagator(const Hamiltonian& hamiltonian);

  Index dimension() const noexcept { return spectrum_.eigenvalues.size(); }
  CMatrix unitary(double t) const;
  DensityMatrix evolve(const DensityMatrix& rho, double t) const;
  Observable evolve(const Observable& observable, double t) const;

 private:
  Spectrum spectrum_;
};

DensityMatrix density_from_pure(const StateVector& psi);

/// sum_i p_i |psi_i><psi_i|. The states need not be orthogonal.
DensityMatrix mix_states(std::span<const StateVector> states, const ProbabilityVector& probs);

DensityMatrix evolve_unitary(const DensityMatrix& rho, const Hamiltonian& h, double t);
Observable evolve_observable(const Observable& o, const Hamiltonian& h, double t);

/// Tr(rho O), real for Hermitian O.
double expectation(const DensityMatrix& rho, const Observable& o);

/// Commutator [A, B].
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// -Tr(rho ln rho) in nats. Eigenvalues in [-1e-10, 0) count as zero.
double vn_entropy(const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace stosszahl
