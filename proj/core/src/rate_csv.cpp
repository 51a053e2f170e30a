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

#include <istream>
#include <ostream>

#include "csv_util.hpp"
#include "stosszahl/master_equation.hpp"

namespace stosszahl::master {

LabeledRates read_rate_matrix_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_data_line(in, line, line_no)) {
    throw InvalidArgument("rate matrix CSV: missing header row");
  }
  auto labels = csv::split(line);
  bool label_column = false;
  if (!labels.empty() && labels.front().empty()) {
    label_column = true;
    labels.erase(labels.begin());
  }
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("rate matrix CSV: header has no state labels");

  RMatrix rates(static_cast<Index>(n), static_cast<Index>(n));
  std::size_t row = 0;
  while (csv::next_data_line(in, line, line_no)) {
    auto cells = csv::split(line);
    if (row >= n) {
      throw InvalidArgument("rate matrix CSV line " + std::to_string(line_no) +
                            ": more rows than states");
    }
    if (label_column) {
      if (cells.front() != labels[row]) {
        throw InvalidArgument("rate matrix CSV line " + std::to_string(line_no) +
                              ": row label '" + cells.front() + "' does not match header '" +
                              labels[row] + "'");
      }
      cells.erase(cells.begin());
    }
    if (cells.size() != n) {
      throw InvalidArgument("rate matrix CSV line " + std::to_string(line_no) + ": expected " +
                            std::to_string(n) + " rates, got " + std::to_string(cells.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      rates(static_cast<Index>(row), static_cast<Index>(j)) = csv::parse_double(cells[j], line_no);
    }
    ++row;
  }
  if (row != n) {
    throw InvalidArgument("rate matrix CSV: expected " + std::to_string(n) + " rows, got " +
                          std::to_string(row));
  }
  return LabeledRates{std::move(labels), RateMatrix(std::move(rates))};
}

void write_rate_matrix_csv(std::ostream& out, const LabeledRates& rates) {
  const std::size_t n = rates.rates.size();
  if (rates.labels.size() != n) throw InvalidArgument("write_rate_matrix_csv: label count");
  for (std::size_t j = 0; j < n; ++j) out << ',' << rates.labels[j];
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << rates.labels[i];
    for (std::size_t j = 0; j < n; ++j) out << ',' << format_real(rates.rates(i, j));
    out << '\n';
  }
}

void write_entropy_series_csv(std::ostream& out, std::span<const EntropySample> series) {
  out << "t,S,D\n";
  for (const auto& s : series) {
    out << format_real(s.t) << ',' << format_real(s.shannon) << ',' << format_real(s.relative)
        << '\n';
  }
}

}  // namespace stosszahl::master
