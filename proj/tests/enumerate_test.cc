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

#include "bme/enumerate.h"

#include <set>

#include "gtest/gtest.h"
#include "bme/error.h"
#include "bme/families.h"

namespace bme {
namespace {

// n = 4, 5 confirmed by the labeled brute force in oracle_test; the rest were
// produced once by an independent enumerator and are pinned here.
TEST(EnumerateTest, CountFixtures) {
  const std::vector<std::pair<int, std::size_t>> fixtures = {
      {4, 1}, {5, 5}, {6, 19}, {7, 67}, {8, 236}, {9, 797}, {10, 2678}};
  for (const auto& [n, count] : fixtures) {
    EXPECT_EQ(EnumerateBicyclic(n).size(), count) << "n=" << n;
  }
}

TEST(EnumerateTest, OutputsAreCanonicalAndSorted) {
  for (int n = 4; n <= 9; ++n) {
    const std::vector<Graph> graphs = EnumerateBicyclic(n);
    std::set<CanonicalForm> seen;
    CanonicalForm previous;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n + 1));
      EXPECT_TRUE(IsConnected(g));
      EXPECT_EQ(ComputeCanonical(g).graph, g);
      const CanonicalForm form = ComputeCanonicalForm(g);
      EXPECT_TRUE(seen.insert(form).second);
      if (i > 0) EXPECT_LT(previous, form);
      previous = form;
    }
  }
}

TEST(EnumerateTest, Deterministic) {
  EXPECT_EQ(EnumerateBicyclic(8), EnumerateBicyclic(8));
}

TEST(EnumerateTest, Limits) {
  EXPECT_THROW(EnumerateBicyclic(3), CapacityError);
  EXPECT_THROW(EnumerateBicyclic(13), CapacityError);
  EXPECT_EQ(EnumerateBicyclic(4)[0].order(), 4);
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(Classify(CvC(3, 3).graph),
            (BicyclicClass{BicyclicKind::kTwoCycles, {3, 3, -1}}));
  EXPECT_EQ(Classify(Theta(3, 3, 2).graph),
            (BicyclicClass{BicyclicKind::kTheta, {3, 3, 2}}));
  const Graph joined = AddEdge(DisjointUnion(Cycle(3).graph, Cycle(3).graph), 0, 3);
  EXPECT_EQ(Classify(joined), (BicyclicClass{BicyclicKind::kTwoCycles, {3, 3, 0}}));
  EXPECT_EQ(ClassLabel(Classify(joined)), "two_cycles(3,3,l=0)");
  EXPECT_EQ(ClassLabel(Classify(Theta(3, 4, 5).graph)), "theta(5,4,3)");
}

TEST(ClassifyTest, Errors) {
  EXPECT_THROW(Classify(Cycle(5).graph), StructuralError);
  EXPECT_THROW(Classify(DisjointUnion(CvC(3, 3).graph, Graph(1))),
               StructuralError);
  EXPECT_THROW(Classify(Theta(4, 4, 4).graph.order() ? AddEdge(Theta(4, 4, 4).graph, 2, 5)
                                                    : Graph()),
               StructuralError);
}

TEST(ClassifyTest, RoundTripThroughBuild) {
  for (int a = 3; a <= 7; ++a) {
    for (int b = 3; b <= 7; ++b) {
      const BicyclicClass cls = Classify(Build(MakeBnab(a, b, 2)).graph);
      EXPECT_EQ(cls, (BicyclicClass{BicyclicKind::kTwoCycles,
                                    {std::max(a, b), std::min(a, b), -1}}));
    }
  }
  for (int x = 2; x <= 6; ++x) {
    for (int y = 2; y <= 6; ++y) {
      for (int c = 3; c <= 6; ++c) {
        if (x == 2 && y == 2) continue;
        std::array<int, 3> sorted = {x, y, c};
        std::sort(sorted.rbegin(), sorted.rend());
        EXPECT_EQ(Classify(Build(MakeBnxyc(x, y, c, 1)).graph),
                  (BicyclicClass{BicyclicKind::kTheta, sorted}));
      }
    }
  }
}

TEST(ClassifyTest, SkeletonsRoundTrip) {
  for (int l = -1; l <= 3; ++l) {
    const BicyclicClass cls{BicyclicKind::kTwoCycles, {5, 4, l}};
    const Graph g = BuildSkeleton(cls);
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(g.order() + 1));
    EXPECT_EQ(Classify(g), cls);
  }
  const BicyclicClass theta{BicyclicKind::kTheta, {5, 4, 2}};
  EXPECT_EQ(Classify(BuildSkeleton(theta)), theta);
}

TEST(ClassifyTest, EveryEnumeratedGraph) {
  for (int n = 4; n <= 10; ++n) {
    for (const Graph& g : EnumerateBicyclic(n)) {
      const BicyclicClass cls = Classify(g);
      const Graph skeleton = BuildSkeleton(cls);
      EXPECT_LE(skeleton.order(), n);
      EXPECT_EQ(skeleton.edge_count(), static_cast<std::size_t>(skeleton.order() + 1));
    }
  }
}

}  // namespace
}  // namespace bme
