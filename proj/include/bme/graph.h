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

#ifndef BME_GRAPH_H_
#define BME_GRAPH_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bme {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1. Every edit is a free
// function that returns a new value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  // Throws ArgumentError for out-of-range endpoints and StructuralError for
  // self-loops or repeated edges.
  static Graph FromEdges(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Removes v and its incident edges; vertices above v shift down by one.
Graph DeleteVertex(const Graph& g, Vertex v);
// Removes every vertex in `vertices` (any order, duplicates ignored); the
// survivors keep their relative order.
Graph DeleteVertices(const Graph& g, std::span<const Vertex> vertices);
Graph DeleteEdge(const Graph& g, Vertex u, Vertex v);
Graph AddEdge(const Graph& g, Vertex u, Vertex v);
// Adds one new vertex (index g.order()) adjacent to `host`.
Graph AddPendant(const Graph& g, Vertex host);
// Vertices of g2 are shifted by g1.order().
Graph DisjointUnion(const Graph& g1, const Graph& g2);
// Merges v into u. The merged vertex takes u's position in the renumbering
// (indices above v shift down) and has neighborhood N(u) ∪ N(v). Throws
// StructuralError if uv is an edge.
Graph IdentifyVertices(const Graph& g, Vertex u, Vertex v);
// new_index[v] is the label of old vertex v; must be a permutation.
Graph Relabel(const Graph& g, std::span<const Vertex> new_index);
// Induced subgraph on `vertices`, renumbered in the given order.
Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<Vertex>> ComponentVertexSets(const Graph& g);
std::vector<Graph> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);
bool IsForest(const Graph& g);
std::vector<int> DegreeSequence(const Graph& g);  // non-increasing

// Isomorphism-invariant key: the order plus the upper triangle of the
// adjacency matrix (row-major) under a canonical vertex ordering, packed
// eight bits per byte.
struct CanonicalForm {
  int order = 0;
  std::string bits;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& form) const {
    return std::hash<std::string>{}(form.bits) ^
           (static_cast<std::size_t>(form.order) * 0x9e3779b97f4a7c15ULL);
  }
};

inline constexpr int kMaxCanonicalOrder = 64;

// Minimum adjacency string over the leaves of an individualization-refinement
// search. Throws CapacityError above kMaxCanonicalOrder.
CanonicalForm ComputeCanonicalForm(const Graph& g);
// The relabeling (new_index[v]) that realizes ComputeCanonicalForm.
std::vector<Vertex> CanonicalLabeling(const Graph& g);
// Both at once; `graph` is g relabeled into canonical order.
struct CanonicalResult {
  CanonicalForm form;
  Graph graph;
};
CanonicalResult ComputeCanonical(const Graph& g);
bool IsIsomorphic(const Graph& a, const Graph& b);

// graph6 supports orders up to 62 with a one-byte header and up to 258047 with
// the '~' + three-byte header. An optional ">>graph6<<" prefix is accepted.
Graph ParseGraph6(std::string_view text);
std::string EmitGraph6(const Graph& g);

}  // namespace bme

#endif  // BME_GRAPH_H_
