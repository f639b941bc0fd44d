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

#ifndef BME_MATCHING_H_
#define BME_MATCHING_H_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bme/graph.h"

namespace bme {

using BigInt = boost::multiprecision::cpp_int;

// m(G,0), m(G,1), ..., m(G, floor(n/2)) for a graph of order n.
class MatchSequence {
 public:
  MatchSequence() : MatchSequence(0) {}
  // All-zero counts except m(G,0) = 1.
  explicit MatchSequence(int order);
  // `counts` is padded with zeros (or must have zero tail) to floor(order/2)+1.
  MatchSequence(int order, std::vector<BigInt> counts);

  int order() const { return order_; }
  std::size_t size() const { return counts_.size(); }
  // Zero for k outside [0, floor(n/2)].
  BigInt operator[](long k) const;
  const std::vector<BigInt>& counts() const { return counts_; }
  // Largest k with m(G,k) > 0.
  int max_matching() const;

  std::vector<std::string> ToStrings() const;

  bool operator==(const MatchSequence&) const = default;

 private:
  int order_;
  std::vector<BigInt> counts_;
};

// m(G ∪ H, k) = Σ_j m(G, j) m(H, k - j).
MatchSequence UnionConvolve(const MatchSequence& a, const MatchSequence& b);

// Exact counts. Components are handled separately and convolved; forests use
// a rooted two-state dynamic program; cyclic components are reduced with
// m(G,k) = m(G-uv,k) + m(G-u-v,k-1) on the lexicographically smallest cycle
// edge. Components of order <= kMemoMaxOrder are memoized by canonical form
// in a process-wide table guarded by a mutex.
MatchSequence ComputeMatchSequence(const Graph& g);

// Direct definition: enumerates every edge subset. Throws CapacityError for
// more than kBruteForceMaxEdges edges.
inline constexpr std::size_t kBruteForceMaxEdges = 30;
MatchSequence BruteForceMatchSequence(const Graph& g);

// Recomputes the sequence through
// m(G,k) = m(G-u,k) + Σ_{v ∈ N(u)} m(G-u-v,k-1).
MatchSequence VertexRecurrence(const Graph& g, Vertex u);

inline constexpr int kMemoMaxOrder = 12;
void ClearMatchMemo();
std::size_t MatchMemoSize();

// Signed coefficients of α(G,x) = Σ_k (-1)^k m(G,k) x^{n-2k}.
class MatchingPolynomial {
 public:
  explicit MatchingPolynomial(MatchSequence sequence);

  int degree() const { return sequence_.order(); }
  const MatchSequence& sequence() const { return sequence_; }
  // coefficients()[i] is the coefficient of x^i, i = 0..n.
  std::vector<BigInt> coefficients() const;
  // q(y) with α(G,x) = x^{n-2K} q(x^2), K = max_matching(); index i is the
  // coefficient of y^i.
  std::vector<BigInt> EvenReduction() const;
  std::string ToString() const;

 private:
  MatchSequence sequence_;
};

MatchingPolynomial ComputeMatchingPolynomial(const Graph& g);

}  // namespace bme

#endif  // BME_MATCHING_H_
