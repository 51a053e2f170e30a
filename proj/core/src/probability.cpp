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

#include "stosszahl/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace stosszahl {

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("ProbabilityVector: empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double& v = values_[i];
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "ProbabilityVector: entry " << i << " is not finite";
      throw InvalidArgument(msg.str());
    }
    if (v < 0.0) {
      if (v < -tol::kProbabilityClamp) {
        std::ostringstream msg;
        msg << "ProbabilityVector: entry " << i << " = " << v << " is negative";
        throw InvalidArgument(msg.str());
      }
      v = 0.0;
    }
  }
  const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::kProbabilitySum) {
    std::ostringstream msg;
    msg << "ProbabilityVector: entries sum to " << format_real(sum) << ", expected 1";
    throw InvalidArgument(msg.str());
  }
}

ProbabilityVector::ProbabilityVector(const RVector& values)
    : ProbabilityVector(std::vector<double>(values.data(), values.data() + values.size())) {}

ProbabilityVector ProbabilityVector::uniform(std::size_t size) {
  if (size == 0) throw InvalidArgument("ProbabilityVector::uniform: size 0");
  return ProbabilityVector(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

ProbabilityVector ProbabilityVector::point_mass(std::size_t size, std::size_t index) {
  if (index >= size) throw InvalidArgument("ProbabilityVector::point_mass: index out of range");
  std::vector<double> v(size, 0.0);
  v[index] = 1.0;
  return ProbabilityVector(std::move(v));
}

RVector ProbabilityVector::to_eigen() const {
  return Eigen::Map<const RVector>(values_.data(), static_cast<Index>(values_.size()));
}

double entropy_term(double x) { return x > 0.0 ? -x * std::log(x) : 0.0; }

double entropy_of_weights(std::span<const double> weights) {
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  double s = 0.0;
  for (double w : sorted) s += entropy_term(w);
  return s;
}

double shannon_entropy(const ProbabilityVector& p) { return entropy_of_weights(p.values()); }

double total_variation(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.size() != q.size()) throw InvalidArgument("total_variation: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
  return 0.5 * d;
}

}  // namespace stosszahl
