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
#include "stosszahl/transactional_gas.hpp"

namespace stosszahl::gas {

void write_ledger_csv(std::ostream& out, std::span<const TransactionEvent> events) {
  out << kLedgerCsvHeader << '\n';
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TransactionEvent& ev = events[i];
    out << i << ',' << format_real(ev.t_emit) << ',' << format_real(ev.t_absorb) << ','
        << ev.emitter << ',' << ev.absorber << ',' << format_real(ev.winner_weight) << ','
        << ev.confirmation_set_size << '\n';
  }
}

std::vector<TransactionEvent> read_ledger_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!csv::next_data_line(in, line, line_no)) {
    throw InvalidArgument("ledger CSV: missing header row");
  }
  if (csv::trim(line) != kLedgerCsvHeader) {
    throw InvalidArgument("ledger CSV line " + std::to_string(line_no) +
                          ": unexpected header, expected '" + std::string(kLedgerCsvHeader) +
                          "'");
  }
  std::vector<TransactionEvent> events;
  while (csv::next_data_line(in, line, line_no)) {
    const auto cells = csv::split(line);
    if (cells.size() != 7) {
      throw InvalidArgument("ledger CSV line " + std::to_string(line_no) + ": expected 7 columns");
    }
    const auto index = csv::parse_unsigned(cells[0], line_no);
    if (index != events.size()) {
      throw InvalidArgument("ledger CSV line " + std::to_string(line_no) +
                            ": event_index out of sequence");
    }
    TransactionEvent ev;
    ev.t_emit = csv::parse_double(cells[1], line_no);
    ev.t_absorb = csv::parse_double(cells[2], line_no);
    ev.emitter = csv::parse_unsigned(cells[3], line_no);
    ev.absorber = csv::parse_unsigned(cells[4], line_no);
    ev.winner_weight = csv::parse_double(cells[5], line_no);
    ev.confirmation_set_size = csv::parse_unsigned(cells[6], line_no);
    events.push_back(ev);
  }
  return events;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
  out << kTrajectoryCsvHeader << '\n';
  for (const auto& r : trajectory.records()) {
    out << format_real(r.t) << ',' << r.quanta << ',' << r.left_count << ','
        << format_real(r.macro_entropy) << '\n';
  }
}

}  // namespace stosszahl::gas
