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
#include <cstdint>
#include <optional>
#include <vector>

namespace stosszahl {

/// Integer occupation numbers of a set of field modes.
class FockOccupancy {
 public:
  explicit FockOccupancy(std::vector<std::uint32_t> occupations);
  static FockOccupancy vacuum(std::size_t modes);

  std::size_t modes() const noexcept { return occupations_.size(); }
  std::uint32_t occupation(std::size_t mode) const;
  std::uint64_t total_quanta() const noexcept;
  bool is_vacuum() const noexcept;
  const std::vector<std::uint32_t>& occupations() const noexcept { return occupations_; }

  friend bool operator==(const FockOccupancy&, const FockOccupancy&) = default;

 private:
  std::vector<std::uint32_t> occupations_;
};

/// Adds one quantum to `mode`. Rejects an out-of-range mode.
FockOccupancy fock_create(const FockOccupancy& occupancy, std::size_t mode);

/// Removes one quantum from `mode`. An empty mode yields std::nullopt: the
/// annihilator applied to an unoccupied mode gives no state at all, which is
/// distinct from the vacuum.
std::optional<FockOccupancy> fock_annihilate(const FockOccupancy& occupancy, std::size_t mode);

}  // namespace stosszahl
