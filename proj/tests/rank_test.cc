// Copyright 2026 The bme Authors.
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

#include "bme/rank.h"

#include "gtest/gtest.h"
#include "bme/energy.h"
#include "bme/error.h"
#include "bme/order.h"

namespace bme {
namespace {

std::vector<BigInt> Counts(std::vector<int> c) { return {c.begin(), c.end()}; }

std::vector<BigInt> Trimmed(const MatchSequence& s) {
  std::vector<BigInt> c = s.counts();
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

TEST(RankTest, DeterministicAcrossWorkers) {
  const RankReport one = Rank(8, 1);
  const RankReport four = Rank(8, 4);
  ASSERT_EQ(one.entries.size(), 236u);
  ASSERT_EQ(four.entries.size(), one.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    EXPECT_EQ(one.entries[i].graph6, four.entries[i].graph6);
    EXPECT_EQ(one.entries[i].energy, four.entries[i].energy);
    EXPECT_EQ(one.entries[i].tied_with_previous, four.entries[i].tied_with_previous);
  }
}

TEST(RankTest, SortedWithTiesFlagged) {
  const RankReport r = Rank(7);
  for (std::size_t i = 1; i < r.entries.size(); ++i) {
    const RankEntry& prev = r.entries[i - 1];
    const RankEntry& cur = r.entries[i];
    EXPECT_LE(prev.energy, cur.energy);
    if (cur.energy - prev.energy > kEnergyTieThreshold) {
      EXPECT_FALSE(cur.tied_with_previous);
    }
    // Equal sequences are always ties.
    if (prev.sequence == cur.sequence) EXPECT_TRUE(cur.tied_with_previous);
  }
}

TEST(RankTest, SmallestIsDiamondWithPendants) {
  for (int n = kMinRankOrder; n <= kMaxRankOrder; ++n) {
    const RankReport r = Rank(n, 2);
    ASSERT_FALSE(r.entries.empty());
    EXPECT_EQ(Trimmed(r.entries[0].sequence), Counts({1, n + 1, 2 * n - 6}));
    ASSERT_EQ(r.five_smallest.size(), 5u);
    EXPECT_TRUE(r.five_smallest[0].matches);
    EXPECT_EQ(r.five_smallest[0].actual_rank, 0);
  }
}

TEST(RankTest, ClaimedFamilyEnergiesAtSix) {
  const RankReport r = Rank(6);
  const double expected[] = {6.898979486, 7.211102551, 7.656854249};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(r.five_smallest[i].energy, expected[i], 1e-8) << i;
  }
  // Roots of y^3 - 7y^2 + 10y - 2 and y^3 - 7y^2 + 11y - 2.
  EXPECT_NEAR(r.five_smallest[3].energy, 8.062903554, 1e-8);
  EXPECT_NEAR(r.five_smallest[4].energy, 8.119929747, 1e-8);
}

// The true bottom of the ranking at n = 6. The second, third and fourth
// slots go to graphs outside the claimed list.
TEST(RankTest, ActualBottomAtSix) {
  const RankReport r = Rank(6);
  const std::vector<std::vector<int>> bottom = {
      {1, 7, 6}, {1, 7, 7}, {1, 7, 8}, {1, 7, 9}, {1, 7, 7, 1}};
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    EXPECT_EQ(Trimmed(r.entries[i].sequence), Counts(bottom[i])) << i;
  }
  EXPECT_FALSE(r.identified);
}

TEST(CoefficientTest, ClaimedSequencesHold) {
  for (int n = 6; n <= 30; ++n) {
    const std::vector<FamilySpec> specs = ClaimedFiveSmallest(n);
    for (int slot = 0; slot < 5; ++slot) {
      const MatchSequence actual = ComputeMatchSequence(Build(specs[slot]).graph);
      std::vector<BigInt> counts = actual.counts();
      counts.resize(4, 0);
      EXPECT_EQ(counts, ClaimedSequence(slot, n)) << "n=" << n << " slot=" << slot;
      EXPECT_LE(actual.max_matching(), 3);
    }
  }
  EXPECT_EQ(ClaimedSequence(4, 30), Counts({1, 31, 107, 50}));
}

TEST(RankTest, Limits) {
  EXPECT_THROW(Rank(5), CapacityError);
  EXPECT_THROW(Rank(11), CapacityError);
  EXPECT_THROW(VerifyTheorem36(5, 6), ArgumentError);
  EXPECT_THROW(VerifyTheorem36(7, 6), ArgumentError);
  EXPECT_THROW(VerifyTheorem36(6, 11), ArgumentError);
}

TEST(Theorem36Test, CoefficientsPassRankingDoesNot) {
  const Theorem36Report r = VerifyTheorem36(6, 7, 30, 2);
  EXPECT_TRUE(r.coefficients_pass());
  EXPECT_EQ(r.coefficients.size(), 25u * 5);
  EXPECT_FALSE(r.ranking_pass());
  ASSERT_EQ(r.ranks.size(), 2u);
}

}  // namespace
}  // namespace bme
