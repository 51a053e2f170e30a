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

#include "stosszahl/master_equation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "stosszahl/linalg.hpp"

namespace stosszahl::master {

namespace {

void require_square(const RMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw InvalidArgument(msg.str());
  }
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace

RateMatrix::RateMatrix(RMatrix rates) : rates_(std::move(rates)) {
  require_square(rates_, "RateMatrix");
  for (Index j = 0; j < rates_.cols(); ++j) {
    for (Index i = 0; i < rates_.rows(); ++i) {
      const double r = rates_(i, j);
      if (i == j && r != 0.0) {
        std::ostringstream msg;
        msg << "RateMatrix: diagonal entry (" << i << "," << j << ") = " << r
            << " must be zero";
        throw InvalidArgument(msg.str());
      }
      if (r < 0.0) {
        std::ostringstream msg;
        msg << "RateMatrix: negative rate " << r << " for transition " << j << " -> " << i;
        throw InvalidArgument(msg.str());
      }
    }
  }
}

RateMatrix RateMatrix::zero(std::size_t states) {
  const auto n = static_cast<Index>(states);
  return RateMatrix(RMatrix::Zero(n, n));
}

MasterOperator::MasterOperator(RMatrix generator) : generator_(std::move(generator)) {
  require_square(generator_, "MasterOperator");
  for (Index j = 0; j < generator_.cols(); ++j) {
    const double scale = std::max(1.0, generator_.col(j).cwiseAbs().maxCoeff());
    const double sum = generator_.col(j).sum();
    if (std::abs(sum) > 1e-12 * scale) {
      std::ostringstream msg;
      msg << "MasterOperator: column " << j << " sums to " << sum << ", expected 0";
      throw InvalidArgument(msg.str());
    }
    for (Index i = 0; i < generator_.rows(); ++i) {
      if (i != j && generator_(i, j) < 0.0) {
        std::ostringstream msg;
        msg << "MasterOperator: off-diagonal (" << i << "," << j << ") = " << generator_(i, j)
            << " is negative";
        throw InvalidArgument(msg.str());
      }
    }
  }
}

MasterOperator build_master_operator(const RateMatrix& rates) {
  RMatrix m = rates.matrix();
  for (Index j = 0; j < m.cols(); ++j) {
    double outflow = 0.0;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i != j) outflow += m(i, j);
    }
    m(j, j) = -outflow;
  }
  return MasterOperator(std::move(m));
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << (passed ? "pass" : "fail") << ": max |column sum| = " << max_column_residual
      << ", min off-diagonal = " << min_off_diagonal;
  for (const auto& e : negative_off_diagonals) {
    out << "; negative entry (" << e.row << "," << e.col << ") = " << e.value;
  }
  return out.str();
}

ValidationReport validate_master(const RMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("validate_master: matrix must be square");
  ValidationReport report;
  const Index n = m.rows();
  report.column_sums.resize(static_cast<std::size_t>(n));
  report.min_off_diagonal = n > 1 ? std::numeric_limits<double>::infinity() : 0.0;
  for (Index j = 0; j < n; ++j) {
    const double sum = m.col(j).sum();
    report.column_sums[static_cast<std::size_t>(j)] = sum;
    report.max_column_residual = std::max(report.max_column_residual, std::abs(sum));
    for (Index i = 0; i < n; ++i) {
      if (i == j) continue;
      report.min_off_diagonal = std::min(report.min_off_diagonal, m(i, j));
      if (m(i, j) < -kOffDiagonalTolerance) {
        report.negative_off_diagonals.push_back(
            {static_cast<std::size_t>(i), static_cast<std::size_t>(j), m(i, j)});
      }
    }
  }
  report.passed = report.max_column_residual <= kColumnSumTolerance &&
                  report.negative_off_diagonals.empty() && m.allFinite();
  return report;
}

ProbabilityVector evolve_probabilities(const MasterOperator& m, const ProbabilityVector& p0,
                                       double t) {
  if (!(t >= 0.0)) {
    throw InvalidArgument("evolve_probabilities: t must be >= 0, the generator does not run "
                          "backwards");
  }
  if (p0.size() != m.size()) throw InvalidArgument("evolve_probabilities: dimension mismatch");
  if (t == 0.0) return p0;
  const RVector p = expm(m.matrix() * t) * p0.to_eigen();
  return ProbabilityVector(p);
}

ProbabilityVector two_state_closed_form(double r12, double r21, const ProbabilityVector& p0,
                                        double t) {
  if (!(r12 >= 0.0) || !(r21 >= 0.0)) {
    throw InvalidArgument("two_state_closed_form: rates must be nonnegative");
  }
  if (r12 + r21 == 0.0) throw InvalidArgument("two_state_closed_form: both rates are zero");
  if (p0.size() != 2) throw InvalidArgument("two_state_closed_form: p0 must have two entries");
  if (!(t >= 0.0)) throw InvalidArgument("two_state_closed_form: t must be >= 0");
  const double relax = r12 + r21;
  const double p1_eq = r12 / relax;
  const double p2_eq = r21 / relax;
  const double decay = std::exp(-relax * t);
  return ProbabilityVector(
      std::vector<double>{p1_eq + (p0[0] - p1_eq) * decay, p2_eq + (p0[1] - p2_eq) * decay});
}

std::size_t null_space_dimension(const MasterOperator& m) {
  Eigen::JacobiSVD<RMatrix> svd(m.matrix());
  const RVector& sigma = svd.singularValues();
  const double cutoff = 1e-11 * std::max(1.0, sigma(0));
  return static_cast<std::size_t>((sigma.array() <= cutoff).count());
}

ProbabilityVector equilibrium(const MasterOperator& m) {
  const Index n = static_cast<Index>(m.size());
  if (n == 1) return ProbabilityVector(std::vector<double>{1.0});
  const std::size_t multiplicity = null_space_dimension(m);
  if (multiplicity != 1) {
    std::ostringstream msg;
    msg << "equilibrium: null space of the master operator has dimension " << multiplicity
        << ", a unique stationary distribution needs exactly 1";
    throw InvalidArgument(msg.str());
  }
  // The rows of M are linearly dependent (columns sum to zero), so one of
  // them can be swapped for the normalization constraint.
  RMatrix a = m.matrix();
  a.row(0).setOnes();
  RVector b = RVector::Zero(n);
  b(0) = 1.0;
  RVector p = a.fullPivLu().solve(b);

  for (Index i = 0; i < n; ++i) {
    if (p(i) < 0.0) {
      if (p(i) < -1e-10) {
        throw InvalidArgument("equilibrium: stationary vector has a negative entry");
      }
      p(i) = 0.0;
    }
  }
  p /= p.sum();
  const double scale = std::max(1.0, m.matrix().cwiseAbs().maxCoeff());
  const double residual = (m.matrix() * p).cwiseAbs().maxCoeff();
  if (residual > 1e-10 * scale) {
    std::ostringstream msg;
    msg << "equilibrium: residual |M p| = " << residual << " too large";
    throw InvalidArgument(msg.str());
  }
  return ProbabilityVector(p);
}

double relative_entropy(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) throw InvalidArgument("relative_entropy: size mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    if (q[k] <= 0.0) {
      std::ostringstream msg;
      msg << "relative_entropy: p has mass " << p[k] << " at index " << k << " where q is 0";
      throw InvalidArgument(msg.str());
    }
    d += p[k] * std::log(p[k] / q[k]);
  }
  return std::max(d, 0.0);
}

std::vector<EntropySample> entropy_series(const MasterOperator& m, const ProbabilityVector& p0,
                                          std::span<const double> times) {
  const ProbabilityVector eq = equilibrium(m);
  std::vector<EntropySample> out;
  out.reserve(times.size());
  for (double t : times) {
    const ProbabilityVector p = evolve_probabilities(m, p0, t);
    out.push_back({t, shannon_entropy(p), relative_entropy(p, eq)});
  }
  return out;
}

}  // namespace stosszahl::master
