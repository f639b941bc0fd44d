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

#include <algorithm>
#include <map>
#include <string>

#include "bme/error.h"
#include "bme/families.h"

namespace bme {

namespace {

std::vector<BicyclicClass> SkeletonClasses(int order) {
  std::vector<BicyclicClass> out;
  for (int a = 3; a <= order; ++a) {
    for (int b = 3; b <= a; ++b) {
      const int l = order - a - b;
      if (l >= -1) out.push_back({BicyclicKind::kTwoCycles, {a, b, l}});
    }
  }
  for (int x = 2; x <= order; ++x) {
    for (int y = 2; y <= x; ++y) {
      const int c = order + 4 - x - y;
      if (c < 2 || c > y || (y == 2 && c == 2)) continue;
      out.push_back({BicyclicKind::kTheta, {x, y, c}});
    }
  }
  return out;
}

// Walks from `from` through `first` along degree-2 core vertices; returns the
// first branch vertex reached and the number of interior vertices passed.
std::pair<Vertex, int> Walk(const Graph& core, const std::vector<int>& degree,
                            Vertex from, Vertex first) {
  Vertex prev = from;
  Vertex cur = first;
  int interior = 0;
  while (degree[cur] == 2) {
    ++interior;
    const auto& nbrs = core.neighbors(cur);
    const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return {cur, interior};
}

}  // namespace

std::string ClassLabel(const BicyclicClass& cls) {
  const auto [p0, p1, p2] = cls.params;
  if (cls.kind == BicyclicKind::kTwoCycles) {
    return "two_cycles(" + std::to_string(p0) + "," + std::to_string(p1) +
           ",l=" + std::to_string(p2) + ")";
  }
  return "theta(" + std::to_string(p0) + "," + std::to_string(p1) + "," +
         std::to_string(p2) + ")";
}

Graph BuildSkeleton(const BicyclicClass& cls) {
  const auto [p0, p1, p2] = cls.params;
  if (cls.kind == BicyclicKind::kTheta) return Theta(p0, p1, p2).graph;
  if (p2 == -1) return CvC(p0, p1).graph;
  if (p0 < 3 || p1 < 3 || p2 < -1) {
    throw ArgumentError("two-cycle skeleton needs a, b >= 3 and l >= -1");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p0; ++i) edges.emplace_back(i, (i + 1) % p0);
  Vertex prev = 0;
  for (int i = 0; i < p2; ++i) {
    edges.emplace_back(prev, p0 + i);
    prev = p0 + i;
  }
  const Vertex start = p0 + p2;
  edges.emplace_back(prev, start);
  for (int i = 0; i < p1; ++i) {
    edges.emplace_back(start + i, start + (i + 1) % p1);
  }
  return Graph::FromEdges(p0 + p1 + p2, edges);
}

BicyclicClass Classify(const Graph& g) {
  if (!IsConnected(g) ||
      g.edge_count() != static_cast<std::size_t>(g.order()) + 1) {
    throw StructuralError("not a bicyclic graph (needs connected, n+1 edges)");
  }
  // 2-core by repeated leaf deletion.
  const int n = g.order();
  std::vector<int> degree(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --degree[w] == 1) leaves.push_back(w);
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) kept.push_back(v);
  }
  const Graph core = InducedSubgraph(g, kept);
  std::vector<int> core_degree(core.order());
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < core.order(); ++v) {
    core_degree[v] = core.degree(v);
    if (core_degree[v] > 2) branch.push_back(v);
  }

  if (branch.size() == 1) {
    const Vertex hub = branch[0];
    std::vector<int> cycles;
    std::vector<char> used(core.order(), 0);
    for (Vertex first : core.neighbors(hub)) {
      if (used[first]) continue;
      const auto [end, interior] = Walk(core, core_degree, hub, first);
      // Mark the far neighbor so each cycle is read once.
      Vertex prev = hub, cur = first;
      for (int i = 0; i < interior; ++i) {
        used[cur] = 1;
        const auto& nbrs = core.neighbors(cur);
        const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
      }
      cycles.push_back(interior + 1);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return {BicyclicKind::kTwoCycles, {cycles.at(0), cycles.at(1), -1}};
  }
  if (branch.size() != 2) {
    throw StructuralError("unexpected 2-core for a bicyclic graph");
  }
  const Vertex h1 = branch[0];
  const Vertex h2 = branch[1];
  std::vector<std::pair<Vertex, int>> walks;
  for (Vertex first : core.neighbors(h1)) {
    walks.push_back(Walk(core, core_degree, h1, first));
  }
  const bool theta = std::all_of(walks.begin(), walks.end(),
                                 [&](const auto& w) { return w.first == h2; });
  if (theta) {
    std::array<int, 3> orders;
    for (int i = 0; i < 3; ++i) orders[i] = walks[i].second + 2;
    std::sort(orders.rbegin(), orders.rend());
    return {BicyclicKind::kTheta, orders};
  }
  int cycle_a = 0;
  int link = 0;
  for (const auto& [end, interior] : walks) {
    if (end == h1) cycle_a = interior + 1;
    if (end == h2) link = interior;
  }
  int cycle_b = 0;
  for (Vertex first : core.neighbors(h2)) {
    const auto [end, interior] = Walk(core, core_degree, h2, first);
    if (end == h2) cycle_b = interior + 1;
  }
  return {BicyclicKind::kTwoCycles,
          {std::max(cycle_a, cycle_b), std::min(cycle_a, cycle_b), link}};
}

std::vector<Graph> EnumerateBicyclic(int n) {
  if (n < kMinEnumerateOrder || n > kMaxEnumerateOrder) {
    throw CapacityError("bicyclic enumeration supports 4 <= n <= 12, got " +
                        std::to_string(n));
  }
  std::map<CanonicalForm, Graph> level;
  for (int order = kMinEnumerateOrder; order <= n; ++order) {
    std::map<CanonicalForm, Graph> next;
    auto insert = [&next](const Graph& g) {
      CanonicalResult canon = ComputeCanonical(g);
      next.try_emplace(std::move(canon.form), std::move(canon.graph));
    };
    for (const auto& cls : SkeletonClasses(order)) insert(BuildSkeleton(cls));
    for (const auto& [form, g] : level) {
      for (Vertex v = 0; v < g.order(); ++v) insert(AddPendant(g, v));
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace bme
