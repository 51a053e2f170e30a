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

#include "stosszahl/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stosszahl/common.hpp"

namespace stosszahl {

namespace {
void require_mode(const FockOccupancy& occ, std::size_t mode) {
  if (mode >= occ.modes()) {
    std::ostringstream msg;
    msg << "Fock mode " << mode << " out of range (" << occ.modes() << " modes)";
    throw InvalidArgument(msg.str());
  }
}
}  // namespace

FockOccupancy::FockOccupancy(std::vector<std::uint32_t> occupations)
    : occupations_(std::move(occupations)) {}

FockOccupancy FockOccupancy::vacuum(std::size_t modes) {
  return FockOccupancy(std::vector<std::uint32_t>(modes, 0));
}

std::uint32_t FockOccupancy::occupation(std::size_t mode) const {
  require_mode(*this, mode);
  return occupations_[mode];
}

std::uint64_t FockOccupancy::total_quanta() const noexcept {
  return std::accumulate(occupations_.begin(), occupations_.end(), std::uint64_t{0});
}

bool FockOccupancy::is_vacuum() const noexcept {
  return std::all_of(occupations_.begin(), occupations_.end(),
                     [](std::uint32_t n) { return n == 0; });
}

FockOccupancy fock_create(const FockOccupancy& occupancy, std::size_t mode) {
  require_mode(occupancy, mode);
  auto occ = occupancy.occupations();
  ++occ[mode];
  return FockOccupancy(std::move(occ));
}

std::optional<FockOccupancy> fock_annihilate(const FockOccupancy& occupancy, std::size_t mode) {
  require_mode(occupancy, mode);
  if (occupancy.occupation(mode) == 0) return std::nullopt;
  auto occ = occupancy.occupations();
  --occ[mode];
  return FockOccupancy(std::move(occ));
}

}  // namespace stosszahl
