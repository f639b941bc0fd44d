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

#include "bme/graph.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "bme/error.h"

namespace bme {

namespace {

void CheckVertex(const Graph& g, Vertex v, const char* what) {
  if (!g.valid_vertex(v)) {
    throw ArgumentError(std::string(what) + ": vertex " + std::to_string(v) +
                        " out of range for order " +
                        std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int order) {
  if (order < 0) throw ArgumentError("graph order must be non-negative");
  adjacency_.resize(order);
}

Graph Graph::FromEdges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    CheckVertex(g, u, "FromEdges");
    CheckVertex(g, v, "FromEdges");
    if (u == v) {
      throw StructuralError("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw StructuralError("repeated edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph DeleteVertex(const Graph& g, Vertex v) {
  CheckVertex(g, v, "DeleteVertex");
  const Vertex gone[] = {v};
  return DeleteVertices(g, gone);
}

Graph DeleteVertices(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> removed(g.order(), 0);
  for (Vertex v : vertices) {
    CheckVertex(g, v, "DeleteVertices");
    removed[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return InducedSubgraph(g, keep);
}

Graph InducedSubgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    CheckVertex(g, vertices[i], "InducedSubgraph");
    if (index[vertices[i]] != -1) {
      throw ArgumentError("InducedSubgraph: repeated vertex");
    }
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph::FromEdges(static_cast<int>(vertices.size()), edges);
}

Graph DeleteEdge(const Graph& g, Vertex u, Vertex v) {
  CheckVertex(g, u, "DeleteEdge");
  CheckVertex(g, v, "DeleteEdge");
  if (!g.has_edge(u, v)) {
    throw ArgumentError("DeleteEdge: " + std::to_string(u) + "-" +
                        std::to_string(v) + " is not an edge");
  }
  const Edge target = std::minmax(u, v);
  std::vector<Edge> edges = g.edges();
  std::erase(edges, target);
  return Graph::FromEdges(g.order(), edges);
}

Graph AddEdge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph::FromEdges(g.order(), edges);
}

Graph AddPendant(const Graph& g, Vertex host) {
  CheckVertex(g, host, "AddPendant");
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(host, g.order());
  return Graph::FromEdges(g.order() + 1, edges);
}

Graph DisjointUnion(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) {
    edges.emplace_back(u + g1.order(), v + g1.order());
  }
  return Graph::FromEdges(g1.order() + g2.order(), edges);
}

Graph IdentifyVertices(const Graph& g, Vertex u, Vertex v) {
  CheckVertex(g, u, "IdentifyVertices");
  CheckVertex(g, v, "IdentifyVertices");
  if (u == v) throw ArgumentError("IdentifyVertices: u == v");
  if (g.has_edge(u, v)) {
    throw StructuralError("IdentifyVertices: " + std::to_string(u) + "-" +
                          std::to_string(v) +
                          " is an edge; merging would create a self-loop");
  }
  auto remap = [&](Vertex w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    const Vertex x = remap(a);
    const Vertex y = remap(b);
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::FromEdges(g.order() - 1, edges);
}

Graph Relabel(const Graph& g, std::span<const Vertex> new_index) {
  if (static_cast<int>(new_index.size()) != g.order()) {
    throw ArgumentError("Relabel: permutation has wrong length");
  }
  std::vector<char> seen(g.order(), 0);
  for (Vertex w : new_index) {
    if (!g.valid_vertex(w) || seen[w]) {
      throw ArgumentError("Relabel: not a permutation");
    }
    seen[w] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    edges.emplace_back(new_index[a], new_index[b]);
  }
  return Graph::FromEdges(g.order(), edges);
}

std::vector<std::vector<Vertex>> ComponentVertexSets(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> component;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<Graph> ConnectedComponents(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vertices : ComponentVertexSets(g)) {
    out.push_back(InducedSubgraph(g, vertices));
  }
  return out;
}

bool IsConnected(const Graph& g) {
  return ComponentVertexSets(g).size() <= 1;
}

bool IsForest(const Graph& g) {
  return g.edge_count() + ComponentVertexSets(g).size() ==
         static_cast<std::size_t>(g.order());
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

// Colors are dense ranks 0..k-1; equal color means same cell.
using Coloring = std::vector<int>;

int CountCells(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines to the coarsest equitable partition below `c`. Cell order is derived
// only from colors and neighbor-color multisets, so it commutes with
// relabeling.
Coloring Refine(const Graph& g, Coloring c) {
  const int n = g.order();
  int cells = CountCells(c);
  std::vector<std::pair<std::vector<int>, Vertex>> signature(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v].first;
      sig.clear();
      sig.push_back(c[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      signature[v].second = v;
    }
    std::sort(signature.begin(), signature.end());
    Coloring next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[i].first != signature[i - 1].first) ++rank;
      next[signature[i].second] = rank;
    }
    const int next_cells = n == 0 ? 0 : rank + 1;
    c = std::move(next);
    if (next_cells == cells) return c;
    cells = next_cells;
  }
}

std::string AdjacencyBits(const Graph& g, const std::vector<Vertex>& position) {
  const int n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[position[v]] = v;
  std::string bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (g.has_edge(at[i], at[j])) {
        bits[bit / 8] = static_cast<char>(bits[bit / 8] | (0x80 >> (bit % 8)));
      }
    }
  }
  return bits;
}

bool AreTwins(const Graph& g, Vertex u, Vertex v) {
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  if (nu.size() != nv.size()) return false;
  auto iu = nu.begin(), iv = nv.begin();
  // Compare N(u) \ {v} with N(v) \ {u}.
  while (true) {
    while (iu != nu.end() && *iu == v) ++iu;
    while (iv != nv.end() && *iv == u) ++iv;
    if (iu == nu.end() || iv == nv.end()) {
      return iu == nu.end() && iv == nv.end();
    }
    if (*iu != *iv) return false;
    ++iu;
    ++iv;
  }
}

struct Search {
  const Graph& g;
  bool have_best = false;
  std::string best_bits;
  std::vector<Vertex> best_position;

  void Run(const Coloring& c) {
    const int n = g.order();
    const int cells = CountCells(c);
    if (cells == n) {
      std::string bits = AdjacencyBits(g, c);
      if (!have_best || bits < best_bits) {
        have_best = true;
        best_bits = std::move(bits);
        best_position = c;
      }
      return;
    }
    // Target cell: the first non-singleton cell in cell order.
    std::vector<int> size(cells, 0);
    for (int color : c) ++size[color];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (c[v] == target) members.push_back(v);
    }
    // Swapping two twins in the same cell is an automorphism that fixes the
    // current coloring, so one branch per twin class suffices.
    std::vector<Vertex> representatives;
    for (Vertex v : members) {
      bool covered = false;
      for (Vertex r : representatives) {
        if (AreTwins(g, r, v)) {
          covered = true;
          break;
        }
      }
      if (!covered) representatives.push_back(v);
    }
    for (Vertex v : representatives) {
      Coloring next(n);
      for (Vertex w = 0; w < n; ++w) {
        next[w] = 2 * c[w] + (c[w] == target && w != v ? 1 : 0);
      }
      // Re-rank to dense colors.
      std::vector<int> used(next);
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (int& color : next) {
        color = static_cast<int>(
            std::lower_bound(used.begin(), used.end(), color) - used.begin());
      }
      Run(Refine(g, std::move(next)));
    }
  }
};

Search RunCanonicalSearch(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CapacityError("canonical form supports at most " +
                        std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                        std::to_string(g.order()));
  }
  Search search{g, false, {}, {}};
  Coloring initial(g.order());
  for (Vertex v = 0; v < g.order(); ++v) initial[v] = g.degree(v);
  std::vector<int> used(initial);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& color : initial) {
    color = static_cast<int>(std::lower_bound(used.begin(), used.end(), color) -
                             used.begin());
  }
  search.Run(Refine(g, std::move(initial)));
  return search;
}

}  // namespace

CanonicalForm ComputeCanonicalForm(const Graph& g) {
  Search search = RunCanonicalSearch(g);
  return CanonicalForm{g.order(), std::move(search.best_bits)};
}

std::vector<Vertex> CanonicalLabeling(const Graph& g) {
  return RunCanonicalSearch(g).best_position;
}

CanonicalResult ComputeCanonical(const Graph& g) {
  Search search = RunCanonicalSearch(g);
  return {CanonicalForm{g.order(), std::move(search.best_bits)},
          Relabel(g, search.best_position)};
}

bool IsIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (DegreeSequence(a) != DegreeSequence(b)) return false;
  return ComputeCanonicalForm(a) == ComputeCanonicalForm(b);
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr char kBias = 63;
constexpr int kMaxGraph6Order = 258047;

}  // namespace

Graph ParseGraph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto next = [&](const char* what) -> int {
    if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
    const unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (ch < 63 || ch > 126) {
      throw ParseError("invalid graph6 character " + std::to_string(ch), pos);
    }
    ++pos;
    return ch - kBias;
  };

  int n = 0;
  if (pos < text.size() && text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | next("size header");
    if (n < 63) throw ParseError("non-canonical long size header", pos - 1);
  } else {
    n = next("size header");
  }

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t b = 0; b < byte_count; ++b) {
    const std::size_t offset = pos;
    const int chunk = next("bit field");
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (chunk >> k) & 1;
      if (bit >= bit_count) {
        if (set) throw ParseError("nonzero padding bits", offset);
        continue;
      }
      if (set) {
        // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        int j = 1;
        std::size_t start = 0;
        while (start + j <= bit) start += j++;
        const int i = static_cast<int>(bit - start);
        edges.emplace_back(i, j);
      }
    }
  }
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Graph::FromEdges(n, edges);
}

std::string EmitGraph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw CapacityError("graph6 supports at most 258047 vertices");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace bme
