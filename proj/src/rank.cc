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

#include <algorithm>
#include <thread>

#include "bme/energy.h"
#include "bme/error.h"
#include "bme/order.h"

namespace bme {

std::vector<FamilySpec> ClaimedFiveSmallest(int n) {
  return {MakeBnxyc(3, 3, 2, n - 4), MakeBnxyc(3, 3, 3, n - 5),
          MakeBnab(3, 3, n - 5), MakeBnab(4, 3, n - 6),
          MakeBnxyc(4, 3, 3, n - 6)};
}

RankReport Rank(int n, int workers) {
  if (n < kMinRankOrder || n > kMaxRankOrder) {
    throw CapacityError("rank supports 6 <= n <= 10, got " + std::to_string(n));
  }
  const std::vector<Graph> graphs = EnumerateBicyclic(n);
  std::vector<RankEntry> entries(graphs.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < graphs.size(); i += stride) {
      RankEntry& e = entries[i];
      e.graph6 = EmitGraph6(graphs[i]);
      e.sequence = ComputeMatchSequence(graphs[i]);
      e.energy = MatchingEnergyRoots(e.sequence).value;
      e.cls = Classify(graphs[i]);
    }
  };
  const std::size_t threads = std::max(workers, 1);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.energy < b.energy || (a.energy == b.energy && a.graph6 < b.graph6);
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    entries[i].tied_with_previous =
        !EnergyStrictlyLess(entries[i - 1].sequence, entries[i - 1].energy,
                            entries[i].sequence, entries[i].energy);
  }

  RankReport report;
  report.n = n;
  report.identified = true;
  for (const FamilySpec& spec : ClaimedFiveSmallest(n)) {
    ExtremalSlot slot;
    slot.spec = spec;
    slot.label = FamilyLabel(spec);
    slot.graph6 = EmitGraph6(ComputeCanonical(Build(spec).graph).graph);
    slot.sequence = ComputeMatchSequence(Build(spec).graph);
    slot.energy = MatchingEnergyRoots(slot.sequence).value;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].graph6 == slot.graph6) slot.actual_rank = static_cast<int>(i);
    }
    const std::size_t index = report.five_smallest.size();
    slot.graph6_at_slot = index < entries.size() ? entries[index].graph6 : "";
    slot.matches = slot.graph6_at_slot == slot.graph6;
    report.identified = report.identified && slot.matches;
    report.five_smallest.push_back(std::move(slot));
  }
  report.strictly_separated = entries.size() >= 6;
  for (std::size_t i = 1; i < 6 && i < entries.size(); ++i) {
    if (entries[i].tied_with_previous) report.strictly_separated = false;
  }
  report.entries = std::move(entries);
  return report;
}

std::vector<BigInt> ClaimedSequence(int slot, int n) {
  static constexpr int kM2[5][2] = {{2, -6}, {3, -9}, {2, -5}, {3, -8}, {4, -13}};
  static constexpr int kM3[5][2] = {{0, 0}, {0, 0}, {1, -5}, {2, -10}, {2, -10}};
  if (slot < 0 || slot > 4) throw ArgumentError("slot must be 0..4");
  return {BigInt(1), BigInt(n + 1), BigInt(kM2[slot][0] * n + kM2[slot][1]),
          BigInt(kM3[slot][0] * n + kM3[slot][1])};
}

bool Theorem36Report::ranking_pass() const {
  return std::all_of(ranks.begin(), ranks.end(), [](const RankReport& r) {
    return r.identified && r.strictly_separated;
  });
}

bool Theorem36Report::coefficients_pass() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const CoefficientCheck& c) { return c.holds; });
}

Theorem36Report VerifyTheorem36(int n_min, int n_max, int coefficient_n_max,
                                int workers) {
  if (n_min <= 5) {
    throw ArgumentError(
        "the five-smallest ordering is only claimed for n > 5 (got n_min = " +
        std::to_string(n_min) + ")");
  }
  if (n_min > n_max || n_max > kMaxRankOrder) {
    throw ArgumentError("need 6 <= n_min <= n_max <= 10");
  }
  Theorem36Report report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) report.ranks.push_back(Rank(n, workers));
  for (int n = kMinRankOrder; n <= coefficient_n_max; ++n) {
    const std::vector<FamilySpec> specs = ClaimedFiveSmallest(n);
    for (int slot = 0; slot < 5; ++slot) {
      CoefficientCheck check;
      check.n = n;
      check.label = FamilyLabel(specs[slot]);
      check.expected = ClaimedSequence(slot, n);
      const MatchSequence actual = ComputeMatchSequence(Build(specs[slot]).graph);
      check.actual = actual.counts();
      check.holds = true;
      for (long k = 0; k < static_cast<long>(actual.size()); ++k) {
        const BigInt want = k < 4 ? check.expected[k] : BigInt(0);
        if (actual[k] != want) check.holds = false;
      }
      report.coefficients.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace bme
