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

#include "stosszahl/matrix_json.hpp"

#include <nlohmann/json.hpp>

namespace stosszahl {

std::string matrix_to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

CMatrix matrix_from_json(const std::string& text) {
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("matrix_from_json: ") + e.what());
  }
  if (!rows.is_array() || rows.empty()) {
    throw InvalidArgument("matrix_from_json: expected a non-empty array of rows");
  }
  const auto n_rows = static_cast<Index>(rows.size());
  const auto n_cols = static_cast<Index>(rows.front().is_array() ? rows.front().size() : 0);
  CMatrix m(n_rows, n_cols);
  for (Index i = 0; i < n_rows; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n_cols) {
      throw InvalidArgument("matrix_from_json: row " + std::to_string(i) + " has wrong length");
    }
    for (Index j = 0; j < n_cols; ++j) {
      const auto& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        throw InvalidArgument("matrix_from_json: entry (" + std::to_string(i) + "," +
                              std::to_string(j) + ") is not an [re, im] pair");
      }
      m(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

}  // namespace stosszahl
