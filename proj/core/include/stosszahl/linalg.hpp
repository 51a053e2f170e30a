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

#include "stosszahl/common.hpp"

namespace stosszahl {

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues are ascending; `eigenvectors` holds the matching orthonormal
/// eigenvectors as columns, so `A = V diag(lambda) V^H`.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;

  CMatrix reconstruct() const;
};

/// Largest entry of |A - A^H|.
double max_asymmetry(const CMatrix& a);

/// Diagonalizes a Hermitian matrix. Rejects inputs whose asymmetry exceeds
/// `tolerance`, reporting the measured asymmetry. Exactly diagonal inputs
/// bypass the iterative solver and return their diagonal verbatim.
Spectrum eig_hermitian(const CMatrix& a, double tolerance = tol::kHermitian);

/// exp(A) for a general real square matrix via scaling and squaring with
/// diagonal Padé approximants of degree 3, 5, 7, 9 or 13.
RMatrix expm(const RMatrix& a);

}  // namespace stosszahl
