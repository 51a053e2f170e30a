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

// Reference implementations used by the tests. Nothing here calls into the
// library code it is meant to check.

#include <cstddef>
#include <vector>

#include "stosszahl/common.hpp"
#include "stosszahl/random.hpp"

namespace stosszahl::oracle {

double normal(Rng& rng);
double uniform(Rng& rng, double lo, double hi);

CMatrix random_hermitian(Index d, Rng& rng, double scale = 1.0);
/// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
CMatrix random_unitary(Index d, Rng& rng);
/// Random density matrix of the given rank (rank <= d).
CMatrix random_density(Index d, Index rank, Rng& rng);
std::vector<double> random_probabilities(std::size_t n, Rng& rng);

/// Sorted eigenvalues of the Hermitian part of `a`.
RVector hermitian_eigenvalues(const CMatrix& a);
/// -sum l ln l over the eigenvalues, ignoring l <= 1e-14.
double entropy_from_eigenvalues(const CMatrix& rho);
/// exp(-iHt) rho exp(iHt) with the exponential from Eigen's matrix functions.
CMatrix conjugate_by_exp(const CMatrix& h, double t, const CMatrix& rho);

/// exp(A) via Eigen's unsupported MatrixFunctions module.
RMatrix expm_reference(const RMatrix& a);
/// Classical fourth-order Runge-Kutta for dp/dt = M p.
RVector rk4(const RMatrix& m, const RVector& p0, double t, std::size_t steps);
/// Random generator with strictly positive off-diagonal rates in [lo, hi]
/// (so irreducible). Columns sum to zero. (i, j) is the rate j -> i.
RMatrix random_generator(std::size_t n, Rng& rng, bool symmetric, double lo = 0.1,
                         double hi = 2.0);

/// Rates of the left-half count k for a gas of N molecules and n quanta with
/// uniform absorber choice, derived by counting emitter/absorber pairs.
/// Returns the rate matrix (i, j) = rate j -> i on labels 0..min(n, N/2).
RMatrix k_chain_rates(std::size_t molecules, std::size_t quanta, double decay_rate);
/// Hypergeometric law of k: C(N/2, k) C(N/2, n-k) / C(N, n).
std::vector<double> hypergeometric(std::size_t molecules, std::size_t quanta);
double log_binomial(double n, double k);

}  // namespace stosszahl::oracle
