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

#include "bme/matching.h"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "bme/error.h"

namespace bme {

namespace {

using Poly = std::vector<BigInt>;

Poly Multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void AddInto(Poly& acc, const Poly& term, std::size_t shift) {
  if (acc.size() < term.size() + shift) acc.resize(term.size() + shift);
  for (std::size_t i = 0; i < term.size(); ++i) acc[i + shift] += term[i];
}

// Rooted DP on a tree: for each vertex, the generating polynomials of
// matchings in its subtree with the vertex left free (free) or matched to a
// child (taken). Iterative, so long paths do not recurse.
MatchSequence TreeSequence(const Graph& tree) {
  const int n = tree.order();
  if (n == 0) return MatchSequence(0);
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : tree.neighbors(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<Poly> free(n, Poly{1});
  std::vector<Poly> taken(n, Poly{});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v == 0) break;
    const Vertex p = parent[v];
    Poly total = free[v];
    AddInto(total, taken[v], 0);
    Poly next_taken = Multiply(taken[p], total);
    AddInto(next_taken, Multiply(free[p], free[v]), 1);
    free[p] = Multiply(free[p], total);
    taken[p] = std::move(next_taken);
    free[v].clear();
    taken[v].clear();
  }
  Poly result = free[0];
  AddInto(result, taken[0], 0);
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return MatchSequence(n, std::move(result));
}

// Lexicographically smallest edge that is not a bridge, or (-1,-1) when the
// graph is a forest. Bridges come from DFS low-links, computed iteratively.
Edge SmallestCycleEdge(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> bridges;
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      const auto& nbrs = g.neighbors(v);
      if (next_child[v] < nbrs.size()) {
        const Vertex w = nbrs[next_child[v]++];
        if (disc[w] == -1) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (parent[v] != -1) {
          const Vertex p = parent[v];
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.push_back(std::minmax(p, v));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(bridges.begin(), bridges.end(), e)) return e;
  }
  return {-1, -1};
}

struct Memo {
  std::mutex mutex;
  std::unordered_map<CanonicalForm, MatchSequence, CanonicalFormHash> table;
};

Memo& GlobalMemo() {
  static Memo memo;
  return memo;
}

MatchSequence ComponentSequence(const Graph& component);

MatchSequence CyclicSequence(const Graph& component) {
  const auto [u, v] = SmallestCycleEdge(component);
  if (u < 0) return TreeSequence(component);
  MatchSequence without_edge = ComputeMatchSequence(DeleteEdge(component, u, v));
  const Vertex ends[] = {u, v};
  MatchSequence without_ends =
      ComputeMatchSequence(DeleteVertices(component, ends));
  std::vector<BigInt> counts = without_edge.counts();
  for (std::size_t k = 0; k < without_ends.size(); ++k) {
    counts[k + 1] += without_ends.counts()[k];
  }
  return MatchSequence(component.order(), std::move(counts));
}

MatchSequence ComponentSequence(const Graph& component) {
  if (component.edge_count() + 1 == static_cast<std::size_t>(component.order())) {
    return TreeSequence(component);
  }
  if (component.order() > kMemoMaxOrder) return CyclicSequence(component);

  const CanonicalForm key = ComputeCanonicalForm(component);
  Memo& memo = GlobalMemo();
  {
    std::lock_guard lock(memo.mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
  }
  MatchSequence result = CyclicSequence(component);
  std::lock_guard lock(memo.mutex);
  memo.table.emplace(key, result);
  return result;
}

}  // namespace

MatchSequence::MatchSequence(int order) : order_(order) {
  if (order < 0) throw ArgumentError("order must be non-negative");
  counts_.assign(order / 2 + 1, BigInt(0));
  counts_[0] = 1;
}

MatchSequence::MatchSequence(int order, std::vector<BigInt> counts)
    : order_(order), counts_(std::move(counts)) {
  if (order < 0) throw ArgumentError("order must be non-negative");
  const std::size_t length = order / 2 + 1;
  for (std::size_t k = length; k < counts_.size(); ++k) {
    if (counts_[k] != 0) {
      throw ArgumentError("nonzero count beyond floor(n/2)");
    }
  }
  counts_.resize(length, BigInt(0));
}

BigInt MatchSequence::operator[](long k) const {
  if (k < 0 || k >= static_cast<long>(counts_.size())) return 0;
  return counts_[k];
}

int MatchSequence::max_matching() const {
  int k = static_cast<int>(counts_.size()) - 1;
  while (k > 0 && counts_[k] == 0) --k;
  return k;
}

std::vector<std::string> MatchSequence::ToStrings() const {
  std::vector<std::string> out;
  out.reserve(counts_.size());
  for (const auto& c : counts_) out.push_back(c.str());
  return out;
}

MatchSequence UnionConvolve(const MatchSequence& a, const MatchSequence& b) {
  return MatchSequence(a.order() + b.order(), Multiply(a.counts(), b.counts()));
}

MatchSequence ComputeMatchSequence(const Graph& g) {
  MatchSequence result(0);
  for (const auto& vertices : ComponentVertexSets(g)) {
    if (vertices.size() == 1) continue;
    result = UnionConvolve(result,
                           ComponentSequence(InducedSubgraph(g, vertices)));
  }
  return MatchSequence(g.order(), result.counts());
}

MatchSequence BruteForceMatchSequence(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  if (edges.size() > kBruteForceMaxEdges) {
    throw CapacityError("brute-force matching count supports at most " +
                        std::to_string(kBruteForceMaxEdges) + " edges");
  }
  std::vector<unsigned long long> counts(g.order() / 2 + 1, 0);
  std::vector<char> used(g.order(), 0);
  // Each edge subset is visited once; subsets with two edges sharing a
  // vertex are cut off as soon as the conflict appears.
  auto visit = [&](auto&& self, std::size_t next, int size) -> void {
    if (next == edges.size()) {
      ++counts[size];
      return;
    }
    self(self, next + 1, size);
    const auto [u, v] = edges[next];
    if (used[u] || used[v]) return;
    used[u] = used[v] = 1;
    self(self, next + 1, size + 1);
    used[u] = used[v] = 0;
  };
  visit(visit, 0, 0);
  std::vector<BigInt> big(counts.begin(), counts.end());
  return MatchSequence(g.order(), std::move(big));
}

MatchSequence VertexRecurrence(const Graph& g, Vertex u) {
  if (!g.valid_vertex(u)) {
    throw ArgumentError("VertexRecurrence: vertex out of range");
  }
  std::vector<BigInt> counts = ComputeMatchSequence(DeleteVertex(g, u)).counts();
  counts.resize(g.order() / 2 + 1, BigInt(0));
  for (Vertex v : g.neighbors(u)) {
    const Vertex ends[] = {u, v};
    const MatchSequence rest = ComputeMatchSequence(DeleteVertices(g, ends));
    for (std::size_t k = 0; k < rest.size(); ++k) counts[k + 1] += rest.counts()[k];
  }
  return MatchSequence(g.order(), std::move(counts));
}

void ClearMatchMemo() {
  Memo& memo = GlobalMemo();
  std::lock_guard lock(memo.mutex);
  memo.table.clear();
}

std::size_t MatchMemoSize() {
  Memo& memo = GlobalMemo();
  std::lock_guard lock(memo.mutex);
  return memo.table.size();
}

MatchingPolynomial::MatchingPolynomial(MatchSequence sequence)
    : sequence_(std::move(sequence)) {}

std::vector<BigInt> MatchingPolynomial::coefficients() const {
  const int n = degree();
  std::vector<BigInt> out(n + 1, BigInt(0));
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    const BigInt& m = sequence_.counts()[k];
    out[n - 2 * k] = (k % 2 == 0) ? m : BigInt(-m);
  }
  return out;
}

std::vector<BigInt> MatchingPolynomial::EvenReduction() const {
  const int top = sequence_.max_matching();
  std::vector<BigInt> out(top + 1);
  for (int k = 0; k <= top; ++k) {
    const BigInt& m = sequence_.counts()[k];
    out[top - k] = (k % 2 == 0) ? m : BigInt(-m);
  }
  return out;
}

std::string MatchingPolynomial::ToString() const {
  const std::vector<BigInt> c = coefficients();
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const BigInt& coef = c[power];
    if (coef == 0) continue;
    const BigInt magnitude = abs(coef);
    if (out.empty()) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || power == 0) out += magnitude.str();
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out.empty() ? "0" : out;
}

MatchingPolynomial ComputeMatchingPolynomial(const Graph& g) {
  return MatchingPolynomial(ComputeMatchSequence(g));
}

}  // namespace bme
