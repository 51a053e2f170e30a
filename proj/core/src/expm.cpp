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

#include <cmath>

#include <Eigen/LU>

#include "stosszahl/linalg.hpp"

namespace stosszahl {

namespace {

// Padé numerator/denominator pieces for exp(A) ~ (V - U)^{-1} (V + U),
// U odd and V even in A. Coefficients and switch points follow Higham's
// scaling-and-squaring algorithm (theta_m bounds the 1-norm for degree m).

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

struct PadeTerms {
  RMatrix u;
  RMatrix v;
};

PadeTerms pade3(const RMatrix& a, const RMatrix& id) {
  constexpr double b[] = {120.0, 60.0, 12.0, 1.0};
  const RMatrix a2 = a * a;
  return {a * (b[3] * a2 + b[1] * id), b[2] * a2 + b[0] * id};
}

PadeTerms pade5(const RMatrix& a, const RMatrix& id) {
  constexpr double b[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  const RMatrix a2 = a * a;
  const RMatrix a4 = a2 * a2;
  return {a * (b[5] * a4 + b[3] * a2 + b[1] * id), b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade7(const RMatrix& a, const RMatrix& id) {
  constexpr double b[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                          25200.0,    1512.0,    56.0,      1.0};
  const RMatrix a2 = a * a;
  const RMatrix a4 = a2 * a2;
  const RMatrix a6 = a4 * a2;
  return {a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade9(const RMatrix& a, const RMatrix& id) {
  constexpr double b[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                          2162160.0,     110880.0,     3960.0,       90.0,        1.0};
  const RMatrix a2 = a * a;
  const RMatrix a4 = a2 * a2;
  const RMatrix a6 = a4 * a2;
  const RMatrix a8 = a6 * a2;
  return {a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

PadeTerms pade13(const RMatrix& a, const RMatrix& id) {
  constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                          1187353796428800.0,  129060195264000.0,   10559470521600.0,
                          670442572800.0,      33522128640.0,       1323241920.0,
                          40840800.0,          960960.0,            16380.0,
                          182.0,               1.0};
  const RMatrix a2 = a * a;
  const RMatrix a4 = a2 * a2;
  const RMatrix a6 = a4 * a2;
  const RMatrix u_high = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const RMatrix v_high = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  return {a * (u_high + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id),
          v_high + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id};
}

}  // namespace

RMatrix expm(const RMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("expm: matrix must be square");
  const Index n = a.rows();
  if (n == 0) return RMatrix(0, 0);
  const RMatrix id = RMatrix::Identity(n, n);
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm1)) throw InvalidArgument("expm: matrix has non-finite entries");

  int squarings = 0;
  PadeTerms terms;
  if (norm1 <= kTheta3) {
    terms = pade3(a, id);
  } else if (norm1 <= kTheta5) {
    terms = pade5(a, id);
  } else if (norm1 <= kTheta7) {
    terms = pade7(a, id);
  } else if (norm1 <= kTheta9) {
    terms = pade9(a, id);
  } else {
    std::frexp(norm1 / kTheta13, &squarings);
    if (squarings < 0) squarings = 0;
    terms = pade13(std::ldexp(1.0, -squarings) * a, id);
  }

  RMatrix result = (terms.v - terms.u).partialPivLu().solve(terms.v + terms.u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace stosszahl
