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

#include "bme/order.h"

#include <random>

#include "gtest/gtest.h"
#include "bme/energy.h"
#include "bme/error.h"
#include "bme/sweep.h"

namespace bme {
namespace {

MatchSequence Seq(std::vector<int> counts) {
  std::vector<BigInt> c(counts.begin(), counts.end());
  return MatchSequence(2 * static_cast<int>(counts.size()), c);
}

MatchSequence SequenceOf(const FamilySpec& spec) {
  return ComputeMatchSequence(Build(spec).graph);
}

TEST(QuasiOrderTest, Examples) {
  const MatchSequence s = Seq({1, 7, 9});
  EXPECT_EQ(CompareMatchSequences(s, s).outcome, QuasiOrder::kEqual);

  const QuasiOrderResult greater = CompareMatchSequences(
      SequenceOf(MakeBnxyc(3, 3, 3, 2)), SequenceOf(MakeBnxyc(3, 3, 2, 3)));
  EXPECT_EQ(greater.outcome, QuasiOrder::kStrictlyGreater);
  EXPECT_EQ(greater.witness_k, 2);
  EXPECT_EQ(SequenceOf(MakeBnxyc(3, 3, 3, 2))[2], 12);
  EXPECT_EQ(SequenceOf(MakeBnxyc(3, 3, 2, 3))[2], 8);

  const QuasiOrderResult incomparable = CompareMatchSequences(
      SequenceOf(MakeBnab(3, 3, 2)), SequenceOf(MakeBnxyc(3, 3, 3, 2)));
  EXPECT_EQ(incomparable.outcome, QuasiOrder::kIncomparable);
  EXPECT_EQ(incomparable.witness_k, 3);
  EXPECT_EQ(incomparable.counter_witness_k, 2);
}

TEST(QuasiOrderTest, PadsWithZeros) {
  EXPECT_EQ(CompareMatchSequences(Seq({1, 3}), Seq({1, 3, 0})).outcome,
            QuasiOrder::kEqual);
  const QuasiOrderResult r = CompareMatchSequences(Seq({1, 3}), Seq({1, 3, 1}));
  EXPECT_EQ(r.outcome, QuasiOrder::kStrictlyLess);
  EXPECT_EQ(r.witness_k, 2);
}

TEST(QuasiOrderTest, AntisymmetricAndReflexive) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(0, 4);
  auto flip = [](QuasiOrder o) {
    if (o == QuasiOrder::kStrictlyLess) return QuasiOrder::kStrictlyGreater;
    if (o == QuasiOrder::kStrictlyGreater) return QuasiOrder::kStrictlyLess;
    return o;
  };
  for (int i = 0; i < 2000; ++i) {
    std::vector<int> a = {1}, b = {1};
    for (int k = 0; k < 3; ++k) a.push_back(coeff(rng));
    for (int k = 0; k < 3; ++k) b.push_back(coeff(rng));
    const MatchSequence sa = Seq(a), sb = Seq(b);
    EXPECT_EQ(CompareMatchSequences(sa, sa).outcome, QuasiOrder::kEqual);
    EXPECT_EQ(CompareMatchSequences(sb, sa).outcome,
              flip(CompareMatchSequences(sa, sb).outcome));
  }
}

// Dominance implies the energy order, on every pair in the n <= 10 corpus
// within each order.
TEST(QuasiOrderTest, SoundAgainstEnergy) {
  for (int n = 4; n <= 10; ++n) {
    std::vector<std::pair<MatchSequence, double>> corpus;
    for (const Graph& g : EnumerateBicyclic(n)) {
      MatchSequence s = ComputeMatchSequence(g);
      const double me = MatchingEnergyRoots(s).value;
      corpus.emplace_back(std::move(s), me);
    }
    int strict_pairs = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        if (CompareMatchSequences(corpus[i].first, corpus[j].first).outcome !=
            QuasiOrder::kStrictlyGreater) {
          continue;
        }
        ++strict_pairs;
        ASSERT_GT(corpus[i].second - corpus[j].second, kEnergyTieThreshold)
            << "n=" << n << " i=" << i << " j=" << j;
      }
    }
    if (corpus.size() > 1) EXPECT_GT(strict_pairs, 0);
  }
}

TEST(EnergyStrictlyLessTest, PrefersDominance) {
  const MatchSequence lo = Seq({1, 3, 1}), hi = Seq({1, 3, 2});
  // Dominance decides even when the floating values say otherwise.
  EXPECT_TRUE(EnergyStrictlyLess(lo, 5.0, hi, 5.0));
  EXPECT_FALSE(EnergyStrictlyLess(hi, 4.0, lo, 5.0));
  EXPECT_FALSE(EnergyStrictlyLess(lo, 1.0, lo, 2.0));
  const MatchSequence x = Seq({1, 4, 0}), y = Seq({1, 3, 2});
  EXPECT_TRUE(EnergyStrictlyLess(x, 1.0, y, 1.0 + 1e-6));
  EXPECT_FALSE(EnergyStrictlyLess(x, 1.0, y, 1.0 + 1e-12));
}

TEST(PathUnionTest, Counts) {
  EXPECT_EQ(PathUnionCount({4}, 2), 1);
  EXPECT_EQ(PathUnionCount({5}, 1), 4);
  EXPECT_EQ(PathUnionCount({2, 2}, 2), 1);
  EXPECT_EQ(PathUnionCount({0, 3}, 1), 2);
  EXPECT_EQ(PathUnionCount({3}, 0), 1);
  EXPECT_EQ(PathUnionCount({3, -1}, 0), 0);
  EXPECT_EQ(PathUnionCount({3}, -1), 0);
}

TEST(Lemma31Test, Examples) {
  for (int pos : {1, 2, 3, 4}) {
    const Lemma31Report r = VerifyLemma31(3, 3, 1, pos);
    EXPECT_TRUE(r.identity_holds) << pos;
    EXPECT_TRUE(r.pass()) << pos;
  }
  const Lemma31Report adjacent = VerifyLemma31(4, 3, 2, 1);
  EXPECT_TRUE(adjacent.pass());
  EXPECT_EQ(adjacent.x + adjacent.y - 2, 4);
  const Lemma31Report flat = VerifyLemma31(4, 3, 0, 1);
  EXPECT_EQ(flat.graph6_b, flat.graph6_bp);
  for (const BigInt& d : flat.difference) EXPECT_EQ(d, 0);
  for (const BigInt& p : flat.predicted) EXPECT_EQ(p, 0);
}

TEST(Lemma31Test, FullSweep) {
  const auto reports = SweepLemma31({3, 7}, {3, 7}, {1, 4});
  EXPECT_EQ(reports.size(), 800u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass()) << r.a << "," << r.b << "," << r.t << "@" << r.attach_pos;
  }
}

TEST(Lemma32Test, Examples) {
  const Lemma32Report small = VerifyLemma32(3, 3, 2, 1, 1);
  EXPECT_TRUE(small.pass());
  EXPECT_LE(small.energy_b, small.energy_bp);
  for (int position : {1, 2}) {
    const Lemma32Report r = VerifyLemma32(4, 3, 3, 2, position);
    EXPECT_TRUE(r.dominance_holds) << position;
    for (const BigInt& d : r.difference) EXPECT_GE(d, 0);
  }
  const Lemma32Report flat = VerifyLemma32(4, 3, 3, 0, 1);
  for (const BigInt& d : flat.difference) EXPECT_EQ(d, 0);
}

TEST(Lemma32Test, ExpansionNeedsOrderTwoPathAsY) {
  const Lemma32Report r = VerifyLemma32(5, 4, 2, 1, 2);
  EXPECT_TRUE(r.expansion_relabeled);
  EXPECT_TRUE(r.expansion_holds);
  EXPECT_FALSE(r.expansion_literal_holds);
  EXPECT_TRUE(VerifyLemma32(5, 2, 4, 1, 2).expansion_literal_holds);
}

TEST(Lemma32Test, FullSweep) {
  const auto reports = SweepLemma32({3, 7}, {2, 7}, {1, 3});
  EXPECT_EQ(reports.size(), 1575u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass()) << r.x << "," << r.y << "," << r.c << "," << r.t;
    EXPECT_TRUE(r.yc_at_least_6);
  }
}

TEST(StrictDecreaseTest, Examples) {
  const StrictDecreaseReport t34 = VerifyTheorem34(4, 3, 1);
  EXPECT_TRUE(t34.pass());
  EXPECT_EQ(t34.smaller_label, "B_{7,3,3}^{(2)}");
  EXPECT_EQ(t34.larger_label, "B_{7,4,3}^{(1)}");
  EXPECT_TRUE(VerifyTheorem34(4, 4, 2).pass());
  EXPECT_TRUE(VerifyTheorem35(4, 3, 3, 1).pass());
  EXPECT_THROW(VerifyTheorem34(3, 3, 1), ArgumentError);
  EXPECT_THROW(VerifyTheorem35(4, 2, 2, 1), ArgumentError);
}

TEST(StrictDecreaseTest, FullSweeps) {
  const auto t34 = SweepTheorem34({4, 7}, {3, 7}, {1, 3});
  EXPECT_EQ(t34.size(), 60u);
  EXPECT_TRUE(AllPass(t34));
  const auto t35 = SweepTheorem35({4, 7}, {2, 7}, {1, 3});
  EXPECT_EQ(t35.size(), 420u);
  EXPECT_TRUE(AllPass(t35));
  for (const auto& r : t35) ASSERT_TRUE(r.comparison.witness_k.has_value());
}

TEST(Lemma33Test, Examples) {
  const Lemma33Report n6 = VerifyLemma33(6);
  bool found = false;
  for (const auto& c : n6.classes) {
    if (c.class_label != "two_cycles(3,3)") continue;
    found = true;
    EXPECT_EQ(c.expected_label, "B_{6,3,3}^{(1)}");
    EXPECT_TRUE(c.pass());
  }
  EXPECT_TRUE(found);

  const Lemma33Report n7 = VerifyLemma33(7);
  found = false;
  for (const auto& c : n7.classes) {
    if (c.class_label != "theta(3,3,2)") continue;
    found = true;
    EXPECT_EQ(c.expected_label, "B_{7,3,3,2}^{(3)}");
    EXPECT_TRUE(c.pass());
  }
  EXPECT_TRUE(found);

  const Lemma33Report n5 = VerifyLemma33(5);
  EXPECT_TRUE(n5.pass());
  for (const auto& c : n5.classes) EXPECT_LT(c.graph_count, 10);
  EXPECT_THROW(VerifyLemma33(4), ArgumentError);
}

TEST(Lemma33Test, Sweep) {
  for (const auto& r : SweepLemma33({5, 9})) EXPECT_TRUE(r.pass()) << r.n;
}

}  // namespace
}  // namespace bme
