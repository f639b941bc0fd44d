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

#ifndef BME_ENUMERATE_H_
#define BME_ENUMERATE_H_

#include <array>
#include <string>
#include <vector>

#include "bme/graph.h"

namespace bme {

enum class BicyclicKind {
  kTwoCycles,  // C_a and C_b joined by a path with `l` interior vertices;
               // l = -1 means the cycles share one vertex
  kTheta,      // three internally disjoint paths of orders x, y, c
};

// params = (a, b, l) with a >= b, or (x, y, c) with x >= y >= c.
struct BicyclicClass {
  BicyclicKind kind = BicyclicKind::kTwoCycles;
  std::array<int, 3> params = {3, 3, -1};

  bool operator==(const BicyclicClass&) const = default;
  auto operator<=>(const BicyclicClass&) const = default;
};

std::string ClassLabel(const BicyclicClass& cls);

// The 2-core of a graph in the class (no pendant trees). Two-cycle layout:
// C_a on 0..a-1, link interior a..a+l-1, C_b from a+l (l = -1: cvc(a,b)).
Graph BuildSkeleton(const BicyclicClass& cls);

// Strips pendant trees and reads the base off the 2-core. Throws
// StructuralError unless g is connected with n+1 edges.
BicyclicClass Classify(const Graph& g);

inline constexpr int kMinEnumerateOrder = 4;
inline constexpr int kMaxEnumerateOrder = 12;

// All connected graphs with n vertices and n+1 edges, one per isomorphism
// class, each relabeled into canonical order and sorted by canonical form.
// Built by growing every 2-core skeleton one pendant vertex at a time with
// canonical-form deduplication at each order. Throws CapacityError outside
// [4, 12].
std::vector<Graph> EnumerateBicyclic(int n);

}  // namespace bme

#endif  // BME_ENUMERATE_H_
