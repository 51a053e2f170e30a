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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/QR>
#include <unsupported/Eigen/MatrixFunctions>

namespace stosszahl::oracle {

double normal(Rng& rng) {
  // Box-Muller on two open uniforms.
  const double u1 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
  const double u2 = (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
}

namespace {

CMatrix gaussian(Index rows, Index cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

}  // namespace

CMatrix random_hermitian(Index d, Rng& rng, double scale) {
  const CMatrix g = gaussian(d, d, rng);
  return scale * 0.5 * (g + g.adjoint());
}

CMatrix random_unitary(Index d, Rng& rng) {
  const CMatrix g = gaussian(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

CMatrix random_density(Index d, Index rank, Rng& rng) {
  const CMatrix g = gaussian(d, rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& x : p) {
    x = -std::log(uniform(rng, 1e-12, 1.0));
    sum += x;
  }
  for (auto& x : p) x /= sum;
  return p;
}

RVector hermitian_eigenvalues(const CMatrix& a) {
  const CMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double entropy_from_eigenvalues(const CMatrix& rho) {
  const RVector l = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Index i = 0; i < l.size(); ++i)
    if (l(i) > 1e-14) s -= l(i) * std::log(l(i));
  return s;
}

CMatrix conjugate_by_exp(const CMatrix& h, double t, const CMatrix& rho) {
  const CMatrix a = Complex(0.0, -t) * h;
  const CMatrix u = a.exp();
  return u * rho * u.adjoint();
}

RMatrix expm_reference(const RMatrix& a) { return a.exp(); }

RVector rk4(const RMatrix& m, const RVector& p0, double t, std::size_t steps) {
  const double h = t / static_cast<double>(steps);
  RVector p = p0;
  for (std::size_t s = 0; s < steps; ++s) {
    const RVector k1 = m * p;
    const RVector k2 = m * (p + 0.5 * h * k1);
    const RVector k3 = m * (p + 0.5 * h * k2);
    const RVector k4 = m * (p + h * k3);
    p += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return p;
}

RMatrix random_generator(std::size_t n, Rng& rng, bool symmetric, double lo, double hi) {
  const auto sz = static_cast<Index>(n);
  RMatrix m = RMatrix::Zero(sz, sz);
  for (Index j = 0; j < sz; ++j) {
    for (Index i = 0; i < sz; ++i) {
      if (i == j) continue;
      if (symmetric && i < j) continue;
      m(i, j) = uniform(rng, lo, hi);
      if (symmetric) m(j, i) = m(i, j);
    }
  }
  for (Index j = 0; j < sz; ++j) m(j, j) = -m.col(j).sum();
  return m;
}

RMatrix k_chain_rates(std::size_t molecules, std::size_t quanta, double decay_rate) {
  const double big_n = static_cast<double>(molecules);
  const double n = static_cast<double>(quanta);
  const double half = big_n / 2.0;
  const std::size_t kmax = std::min(quanta, molecules / 2);
  const auto labels = static_cast<Index>(kmax + 1);
  RMatrix r = RMatrix::Zero(labels, labels);
  const double absorbers = big_n - n;
  if (absorbers <= 0.0 || quanta == 0) return r;
  for (Index k = 0; k < labels; ++k) {
    const double kd = static_cast<double>(k);
    // a left emitter (k of them, each at rate lambda) hands its quantum to a
    // right absorber (half - (n - k) of them) out of all absorbers
    const double right_ground = half - (n - kd);
    const double left_ground = half - kd;
    if (k > 0) r(k - 1, k) = decay_rate * kd * right_ground / absorbers;
    if (k + 1 < labels) r(k + 1, k) = decay_rate * (n - kd) * left_ground / absorbers;
  }
  return r;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::vector<double> hypergeometric(std::size_t molecules, std::size_t quanta) {
  const double half = static_cast<double>(molecules / 2);
  const double n = static_cast<double>(quanta);
  const std::size_t kmax = std::min(quanta, molecules / 2);
  std::vector<double> p(kmax + 1, 0.0);
  const double norm = log_binomial(static_cast<double>(molecules), n);
  for (std::size_t k = 0; k <= kmax; ++k) {
    const double kd = static_cast<double>(k);
    if (n - kd > half) continue;
    p[k] = std::exp(log_binomial(half, kd) + log_binomial(half, n - kd) - norm);
  }
  return p;
}

}  // namespace stosszahl::oracle
