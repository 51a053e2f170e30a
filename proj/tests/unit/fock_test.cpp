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

#include <gtest/gtest.h>

#include <vector>

#include "stosszahl/common.hpp"
#include "stosszahl/fock.hpp"

namespace stosszahl {
namespace {

// Every occupancy of up to `modes` modes with at most `max_quanta` quanta in total.
std::vector<FockOccupancy> all_occupancies(std::size_t modes, std::uint32_t max_quanta) {
  std::vector<FockOccupancy> out;
  std::vector<std::uint32_t> occ(modes, 0);
  const auto recurse = [&](auto& self, std::size_t mode, std::uint32_t left) -> void {
    if (mode == modes) {
      out.emplace_back(occ);
      return;
    }
    for (std::uint32_t q = 0; q <= left; ++q) {
      occ[mode] = q;
      self(self, mode + 1, left - q);
    }
    occ[mode] = 0;
  };
  recurse(recurse, 0, max_quanta);
  return out;
}

TEST(Fock, EnumerationSizes) {
  // C(q + m, m) occupancies with at most q quanta in m modes
  EXPECT_EQ(all_occupancies(1, 3).size(), 4u);
  EXPECT_EQ(all_occupancies(2, 3).size(), 10u);
  EXPECT_EQ(all_occupancies(3, 3).size(), 20u);
}

TEST(Fock, AnnihilatingVacuumGivesNull) {
  for (std::size_t modes = 1; modes <= 3; ++modes) {
    const auto vac = FockOccupancy::vacuum(modes);
    EXPECT_TRUE(vac.is_vacuum());
    for (std::size_t m = 0; m < modes; ++m) {
      const auto result = fock_annihilate(vac, m);
      EXPECT_FALSE(result.has_value());
    }
  }
}

TEST(Fock, EmptyModeGivesNullEverywhere) {
  for (std::size_t modes = 1; modes <= 3; ++modes) {
    for (const auto& occ : all_occupancies(modes, 3)) {
      for (std::size_t m = 0; m < modes; ++m) {
        const auto result = fock_annihilate(occ, m);
        EXPECT_EQ(result.has_value(), occ.occupation(m) > 0);
      }
    }
  }
}

TEST(Fock, CreateThenAnnihilateIsIdentity) {
  for (std::size_t modes = 1; modes <= 3; ++modes) {
    for (const auto& occ : all_occupancies(modes, 3)) {
      for (std::size_t m = 0; m < modes; ++m) {
        const auto up = fock_create(occ, m);
        EXPECT_EQ(up.total_quanta(), occ.total_quanta() + 1);
        const auto back = fock_annihilate(up, m);
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, occ);
      }
    }
  }
}

TEST(Fock, AnnihilateThenCreateOnlyWhenOccupied) {
  for (const auto& occ : all_occupancies(3, 3)) {
    for (std::size_t m = 0; m < 3; ++m) {
      const auto down = fock_annihilate(occ, m);
      if (!down) continue;
      EXPECT_EQ(fock_create(*down, m), occ);
    }
  }
}

TEST(Fock, SingleQuantumToVacuumIsNotNull) {
  const FockOccupancy one(std::vector<std::uint32_t>{0, 1});
  const auto result = fock_annihilate(one, 1);
  ASSERT_TRUE(result.has_value());
  EXPECT_TRUE(result->is_vacuum());
  EXPECT_EQ(*result, FockOccupancy::vacuum(2));
}

TEST(Fock, BadModeRejected) {
  const auto vac = FockOccupancy::vacuum(2);
  EXPECT_THROW(fock_create(vac, 2), InvalidArgument);
  EXPECT_THROW(fock_annihilate(vac, 5), InvalidArgument);
  EXPECT_THROW(vac.occupation(2), InvalidArgument);
}

}  // namespace
}  // namespace stosszahl
