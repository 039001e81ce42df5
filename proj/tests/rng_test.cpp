// Copyright 2026 The Authors.
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

#include "irs/rng.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "irs/errors.hpp"

namespace irs {
namespace {

TEST(RngTest, EngineSequenceIsPinned) {
  Rng rng(42);
  EXPECT_EQ(rng.next(), 13930160852258120406ULL);
  EXPECT_EQ(rng.next(), 11788048577503494824ULL);
  EXPECT_EQ(rng.next(), 13874630024467741450ULL);
}

TEST(RngTest, UniformStaysInHalfOpenUnitInterval) {
  Rng rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, BelowCoversRangeUniformly) {
  Rng rng(3);
  std::vector<int> counts(7, 0);
  constexpr int kDraws = 70000;
  for (int i = 0; i < kDraws; ++i) ++counts[rng.below(7)];
  for (int c : counts) EXPECT_NEAR(c, kDraws / 7.0, 500.0);
  EXPECT_THROW(rng.below(0), InvalidArgument);
}

TEST(RngTest, ComplexNormalHasRequestedVariance) {
  Rng rng(11);
  constexpr int kDraws = 200000;
  double power = 0.0;
  std::complex<double> mean = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const auto z = rng.complex_normal(2.5);
    power += std::norm(z);
    mean += z;
  }
  EXPECT_NEAR(power / kDraws, 2.5, 0.05);
  EXPECT_LT(std::abs(mean / static_cast<double>(kDraws)), 0.02);
}

TEST(RngTest, DerivedStreamsDiffer) {
  EXPECT_EQ(derive_seed(2024, 0), 11487996472437173461ULL);
  EXPECT_NE(derive_seed(2024, 0), derive_seed(2024, 1));
  EXPECT_NE(derive_seed(2024, 0), derive_seed(2025, 0));
}

}  // namespace
}  // namespace irs
