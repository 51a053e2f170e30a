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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stosszahl/common.hpp"
#include "stosszahl/probability.hpp"

namespace stosszahl::master {

// Index convention throughout this module: entry (i, j) of a rate matrix or
// master operator is the rate of the transition j -> i. Columns are "from",
// rows are "to", so dP/dt = M P with P a column vector.

/// Nonnegative transition rates with a zero diagonal; (i, j) is the rate j -> i.
class RateMatrix {
 public:
  explicit RateMatrix(RMatrix rates);
  static RateMatrix zero(std::size_t states);

  std::size_t size() const noexcept { return static_cast<std::size_t>(rates_.rows()); }
  double operator()(std::size_t to, std::size_t from) const { return rates_(to, from); }
  const RMatrix& matrix() const noexcept { return rates_; }

 private:
  RMatrix rates_;
};

/// Generator of the master equation: nonnegative off-diagonals and columns
/// summing to zero (to 1e-12 relative to the column scale).
class MasterOperator {
 public:
  explicit MasterOperator(RMatrix generator);

  std::size_t size() const noexcept { return static_cast<std::size_t>(generator_.rows()); }
  const RMatrix& matrix() const noexcept { return generator_; }

 private:
  RMatrix generator_;
};

MasterOperator build_master_operator(const RateMatrix& rates);

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

struct ValidationReport {
  bool passed = false;
  std::vector<double> column_sums;
  double max_column_residual = 0.0;
  double min_off_diagonal = 0.0;
  std::vector<MatrixEntry> negative_off_diagonals;

  std::string summary() const;
};

inline constexpr double kColumnSumTolerance = 1e-10;
inline constexpr double kOffDiagonalTolerance = 1e-12;

/// Checks the structural properties of a master operator without throwing.
/// Passes iff max |column sum| <= 1e-10 and every off-diagonal >= -1e-12.
ValidationReport validate_master(const RMatrix& m);

/// exp(M t) p0 by scaling and squaring. t must be >= 0.
ProbabilityVector evolve_probabilities(const MasterOperator& m, const ProbabilityVector& p0,
                                       double t);

/// Analytic two-state solution. `r12` is the rate 2 -> 1 and `r21` the rate
/// 1 -> 2; p1(t) = p1_eq + (p1(0) - p1_eq) exp(-(r12 + r21) t) with
/// p1_eq = r12 / (r12 + r21).
ProbabilityVector two_state_closed_form(double r12, double r21, const ProbabilityVector& p0,
                                        double t);

/// Stationary distribution from the null space of M. Rejects generators whose
/// null space is not one-dimensional.
ProbabilityVector equilibrium(const MasterOperator& m);

/// Dimension of the numerical null space of M (singular values below a
/// scale-relative cutoff).
std::size_t null_space_dimension(const MasterOperator& m);

/// Kullback-Leibler divergence D(p || q) in nats. Rejects p with mass where q
/// has none.
double relative_entropy(const ProbabilityVector& p, const ProbabilityVector& q);

struct EntropySample {
  double t;
  double shannon;
  double relative;  // D(p(t) || p_eq)
};

std::vector<EntropySample> entropy_series(const MasterOperator& m, const ProbabilityVector& p0,
                                          std::span<const double> times);

/// Rate matrix plus the state labels from the CSV header row.
struct LabeledRates {
  std::vector<std::string> labels;
  RateMatrix rates;
};

/// Reads a rate matrix from CSV: a header row of state labels followed by one
/// row per target state i with entries rate(j -> i). A leading label column
/// is accepted when the header starts with an empty cell.
LabeledRates read_rate_matrix_csv(std::istream& in);
void write_rate_matrix_csv(std::ostream& out, const LabeledRates& rates);

/// Writes "t,S,D" rows.
void write_entropy_series_csv(std::ostream& out, std::span<const EntropySample> series);

}  // namespace stosszahl::master
