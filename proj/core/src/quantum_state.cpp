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

#include "stosszahl/quantum_state.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace stosszahl {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidArgument(msg.str());
  }
  if (m.rows() > kMaxDimension) {
    std::ostringstream msg;
    msg << what << ": dimension " << m.rows() << " exceeds the limit of " << kMaxDimension;
    throw InvalidArgument(msg.str());
  }
}

void require_hermitian(const CMatrix& m, const char* what) {
  const double asym = max_asymmetry(m);
  if (!(asym <= tol::kHermitian)) {
    std::ostringstream msg;
    msg << what << ": not Hermitian, max |A - A^H| = " << asym;
    throw InvalidArgument(msg.str());
  }
}

void require_same_dimension(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw InvalidArgument(msg.str());
  }
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InvalidArgument("StateVector: empty");
  if (amplitudes_.size() > kMaxDimension) {
    throw InvalidArgument("StateVector: dimension exceeds the limit of 64");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= tol::kNorm)) {
    std::ostringstream msg;
    msg << "StateVector: squared norm " << format_real(norm2) << " is not 1";
    throw InvalidArgument(msg.str());
  }
}

StateVector StateVector::normalized(CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidArgument("StateVector::normalized: zero or non-finite vector");
  }
  return StateVector(amplitudes / norm);
}

StateVector StateVector::basis(Index dimension, Index index) {
  if (index < 0 || index >= dimension) throw InvalidArgument("StateVector::basis: bad index");
  CVector v = CVector::Zero(dimension);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix entries) {
  require_square(entries, "DensityMatrix");
  require_hermitian(entries, "DensityMatrix");
  entries_ = hermitian_part(entries);
  const double trace = entries_.trace().real();
  if (!(std::abs(trace - 1.0) <= tol::kTrace)) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << format_real(trace) << " is not 1";
    throw InvalidArgument(msg.str());
  }
  const double min_eig = eig_hermitian(entries_).eigenvalues.minCoeff();
  if (min_eig < -tol::kNegativeEigenvalue) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite, minimum eigenvalue " << min_eig;
    throw InvalidArgument(msg.str());
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index dimension) {
  if (dimension <= 0) throw InvalidArgument("DensityMatrix::maximally_mixed: bad dimension");
  return DensityMatrix(CMatrix::Identity(dimension, dimension) /
                       static_cast<double>(dimension));
}

DensityMatrix DensityMatrix::diagonal(const ProbabilityVector& p) {
  const auto n = static_cast<Index>(p.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return DensityMatrix(std::move(m));
}

template <class Tag>
HermitianOperator<Tag>::HermitianOperator(CMatrix entries) {
  require_square(entries, "HermitianOperator");
  require_hermitian(entries, "HermitianOperator");
  entries_ = hermitian_part(entries);
}

template class HermitianOperator<detail::HamiltonianTag>;
template class HermitianOperator<detail::ObservableTag>;

UnitaryPropagator::UnitaryPropagator(const Hamiltonian& hamiltonian)
    : spectrum_(eig_hermitian(hamiltonian.matrix())) {}

CMatrix UnitaryPropagator::unitary(double t) const {
  const Index n = dimension();
  CVector phases(n);
  for (Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, -spectrum_.eigenvalues(k) * t);
  return spectrum_.eigenvectors * phases.asDiagonal() * spectrum_.eigenvectors.adjoint();
}

DensityMatrix UnitaryPropagator::evolve(const DensityMatrix& rho, double t) const {
  require_same_dimension(rho.dimension(), dimension(), "evolve_unitary");
  const CMatrix u = unitary(t);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

Observable UnitaryPropagator::evolve(const Observable& observable, double t) const {
  require_same_dimension(observable.dimension(), dimension(), "evolve_observable");
  const CMatrix u = unitary(t);
  return Observable(u.adjoint() * observable.matrix() * u);
}

DensityMatrix density_from_pure(const StateVector& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix mix_states(std::span<const StateVector> states, const ProbabilityVector& probs) {
  if (states.empty()) throw InvalidArgument("mix_states: no states");
  if (states.size() != probs.size()) {
    std::ostringstream msg;
    msg << "mix_states: " << states.size() << " states but " << probs.size() << " probabilities";
    throw InvalidArgument(msg.str());
  }
  const Index d = states.front().dimension();
  CMatrix rho = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < states.size(); ++i) {
    require_same_dimension(states[i].dimension(), d, "mix_states");
    rho += probs[i] * (states[i].amplitudes() * states[i].amplitudes().adjoint());
  }
  return DensityMatrix(std::move(rho));
}

DensityMatrix evolve_unitary(const DensityMatrix& rho, const Hamiltonian& h, double t) {
  require_same_dimension(rho.dimension(), h.dimension(), "evolve_unitary");
  return UnitaryPropagator(h).evolve(rho, t);
}

Observable evolve_observable(const Observable& o, const Hamiltonian& h, double t) {
  require_same_dimension(o.dimension(), h.dimension(), "evolve_observable");
  return UnitaryPropagator(h).evolve(o, t);
}

double expectation(const DensityMatrix& rho, const Observable& o) {
  require_same_dimension(rho.dimension(), o.dimension(), "expectation");
  return (rho.matrix() * o.matrix()).trace().real();
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double vn_entropy(const DensityMatrix& rho) {
  const RVector lambda = eig_hermitian(rho.matrix()).eigenvalues;
  std::vector<double> weights(static_cast<std::size_t>(lambda.size()));
  for (Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda(i);
    if (l < -tol::kNegativeEigenvalue) {
      throw InvalidArgument("vn_entropy: density matrix has a negative eigenvalue");
    }
    weights[static_cast<std::size_t>(i)] = l < 0.0 ? 0.0 : l;
  }
  return entropy_of_weights(weights);
}

double purity(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

}  // namespace stosszahl
