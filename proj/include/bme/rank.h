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

#ifndef BME_RANK_H_
#define BME_RANK_H_

#include <string>
#include <vector>

#include "bme/enumerate.h"
#include "bme/families.h"
#include "bme/matching.h"

namespace bme {

inline constexpr int kMinRankOrder = 6;
inline constexpr int kMaxRankOrder = 10;

struct RankEntry {
  std::string graph6;
  MatchSequence sequence;
  double energy = 0;
  BicyclicClass cls;
  // Energy within kEnergyTieThreshold of the previous entry and not
  // separated by strict sequence dominance.
  bool tied_with_previous = false;
};

// One of the five claimed extremal graphs and where it actually sits.
struct ExtremalSlot {
  FamilySpec spec;
  std::string label;
  std::string graph6;  // canonical
  MatchSequence sequence;
  double energy = 0;
  int actual_rank = -1;  // 0-based index in RankReport::entries
  std::string graph6_at_slot;  // the graph actually ranked at this slot
  bool matches = false;
};

struct RankReport {
  int n = 0;
  std::vector<RankEntry> entries;  // ascending energy
  std::vector<ExtremalSlot> five_smallest;
  // five_smallest[i] is entries[i] for i = 0..4.
  bool identified = false;
  // entries[0] < ... < entries[4] < entries[5] strictly.
  bool strictly_separated = false;
};

// B_{n,3,3,2}^{(n-4)}, B_{n,3,3,3}^{(n-5)}, B_{n,3,3}^{(n-5)},
// B_{n,4,3}^{(n-6)}, B_{n,4,3,3}^{(n-6)} in claimed ascending order.
std::vector<FamilySpec> ClaimedFiveSmallest(int n);

// Enumerates every bicyclic graph of order n, computes its matching energy
// (root route) and sorts. `workers` threads share the per-graph work; the
// result does not depend on it. Throws CapacityError outside [6, 10].
RankReport Rank(int n, int workers = 1);

struct CoefficientCheck {
  int n = 0;
  std::string label;
  std::vector<BigInt> expected;  // m_0..m_3
  std::vector<BigInt> actual;
  bool holds = false;
};

// Closed-form sequences of the five claimed graphs: m_1 = n+1,
// m_2 in {2n-6, 3n-9, 2n-5, 3n-8, 4n-13}, m_3 in {0, 0, n-5, 2n-10, 2n-10},
// zero beyond.
std::vector<BigInt> ClaimedSequence(int slot, int n);

struct Theorem36Report {
  int n_min = 0, n_max = 0;
  std::vector<RankReport> ranks;
  std::vector<CoefficientCheck> coefficients;
  bool ranking_pass() const;
  bool coefficients_pass() const;
  bool pass() const { return ranking_pass() && coefficients_pass(); }
};

// Requires 6 <= n_min <= n_max <= 10 (the claim is for n > 5). Coefficient
// identities are checked for n in [6, coefficient_n_max].
Theorem36Report VerifyTheorem36(int n_min, int n_max,
                                int coefficient_n_max = 30, int workers = 1);

}  // namespace bme

#endif  // BME_RANK_H_
