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

#include <cmath>
#include <set>

#include "stosszahl/common.hpp"
#include "stosszahl/random.hpp"

namespace stosszahl {
namespace {

TEST(Rng, StandardEngineCheckValue) {
  // The value every conforming mt19937_64 must produce on its 10000th call.
  Rng rng;
  rng.discard(9999);
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(Rng, SeedsReproduce) {
  Rng a = make_rng(77), b = make_rng(77), c = make_rng(78);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
}

TEST(Rng, MemberStreamsDiffer) {
  std::set<std::uint64_t> first_words;
  for (std::uint64_t m = 0; m < 200; ++m) {
    Rng r = make_member_rng(5, m);
    first_words.insert(r());
  }
  EXPECT_EQ(first_words.size(), 200u);
  Rng x = make_member_rng(5, 3), y = make_member_rng(5, 3);
  EXPECT_EQ(x(), y());
  Rng hi = make_member_rng(5ULL << 32, 0), lo = make_member_rng(5, 0);
  EXPECT_NE(hi(), lo());
}

TEST(Rng, UniformRanges) {
  Rng rng = make_rng(1);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = uniform_unit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = uniform_open(rng);
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
    sum += u;
  }
  // mean of U(0,1) with n samples: sd = 1/sqrt(12 n) ~ 6.5e-4
  EXPECT_NEAR(sum / n, 0.5, 5 * 6.5e-4);
}

TEST(Rng, ExponentialMeanAndErrors) {
  Rng rng = make_rng(2);
  const double rate = 4.0;
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = exponential_wait(rng, rate);
    ASSERT_GT(w, 0.0);
    sum += w;
  }
  // sd of the sample mean = (1/rate)/sqrt(n)
  EXPECT_NEAR(sum / n, 0.25, 5 * 0.25 / std::sqrt(n));
  EXPECT_THROW(exponential_wait(rng, 0.0), InvalidArgument);
  EXPECT_THROW(exponential_wait(rng, -1.0), InvalidArgument);
}

TEST(Rng, UniformIndexCoversRange) {
  Rng rng = make_rng(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[uniform_index(rng, 7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_THROW(uniform_index(rng, 0), InvalidArgument);
}

}  // namespace
}  // namespace stosszahl
