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

#include "stosszahl/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

namespace stosszahl {

CMatrix Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double max_asymmetry(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

bool is_exactly_diagonal(const CMatrix& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j && a(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

Spectrum diagonal_spectrum(const CMatrix& a) {
  const Index n = a.rows();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return a(x, x).real() < a(y, y).real(); });
  Spectrum s{RVector(n), CMatrix::Zero(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    s.eigenvalues(k) = a(src, src).real();
    s.eigenvectors(src, k) = 1.0;
  }
  return s;
}

}  // namespace

Spectrum eig_hermitian(const CMatrix& a, double tolerance) {
  if (a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix is " << a.rows() << "x" << a.cols() << ", expected square";
    throw InvalidArgument(msg.str());
  }
  if (a.rows() == 0) throw InvalidArgument("eig_hermitian: empty matrix");
  const double asym = max_asymmetry(a);
  if (!(asym <= tolerance)) {
    std::ostringstream msg;
    msg << "eig_hermitian: matrix is not Hermitian, max |A - A^H| = " << asym
        << " exceeds tolerance " << tolerance;
    throw InvalidArgument(msg.str());
  }
  if (is_exactly_diagonal(a)) return diagonal_spectrum(a);

  const CMatrix hermitian = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw InvalidArgument("eig_hermitian: eigensolver did not converge");
  }
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace stosszahl
