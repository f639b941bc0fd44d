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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bme/energy.h"
#include "bme/enumerate.h"
#include "bme/families.h"
#include "bme/matching.h"
#include "bme/order.h"
#include "bme/rank.h"
#include "bme/sweep.h"
#include "test_util.h"

namespace bme {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome RankingOfFiveSmallest() {
  const Theorem36Report r = VerifyTheorem36(6, 10, 6, 4);
  Outcome out;
  std::ostringstream detail;
  for (const RankReport& rank : r.ranks) {
    if (rank.identified && rank.strictly_separated) continue;
    out.pass = false;
    detail << "n=" << rank.n << ":";
    for (std::size_t i = 0; i < rank.five_smallest.size(); ++i) {
      const ExtremalSlot& slot = rank.five_smallest[i];
      if (slot.matches) continue;
      detail << " slot " << i + 1 << " has " << slot.graph6_at_slot << ", "
             << slot.label << " is at rank " << slot.actual_rank + 1 << ";";
    }
    if (!rank.strictly_separated) detail << " gap <= 1e-9;";
    detail << " ";
  }
  out.detail = out.pass ? "n=6..10 identified and separated" : detail.str();
  return out;
}

Outcome CoefficientIdentities() {
  const Theorem36Report r = VerifyTheorem36(6, 6, 30);
  Outcome out{r.coefficients_pass(), ""};
  int failures = 0;
  for (const CoefficientCheck& c : r.coefficients) {
    if (!c.holds) {
      ++failures;
      out.detail += c.label + " ";
    }
  }
  out.detail += std::to_string(r.coefficients.size()) + " identities, " +
                std::to_string(failures) + " failing";
  return out;
}

template <typename Report>
Outcome Summarize(const std::vector<Report>& reports) {
  int failures = 0;
  for (const Report& r : reports) failures += !r.pass();
  return {failures == 0 && !reports.empty(),
          std::to_string(reports.size()) + " cases, " +
              std::to_string(failures) + " failing"};
}

Outcome Lemma31Identity() {
  return Summarize(SweepLemma31({3, 7}, {3, 7}, {1, 4}));
}

Outcome Lemma32Dominance() {
  return Summarize(SweepLemma32({3, 7}, {2, 7}, {1, 3}));
}

Outcome StrictDecrease() {
  std::vector<StrictDecreaseReport> all = SweepTheorem34({4, 7}, {3, 7}, {1, 3});
  const auto t35 = SweepTheorem35({4, 7}, {2, 7}, {1, 3});
  all.insert(all.end(), t35.begin(), t35.end());
  return Summarize(all);
}

Outcome OracleEquivalence() {
  int checked = 0, failures = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : EnumerateBicyclic(n)) {
      ++checked;
      failures += ComputeMatchSequence(g) != BruteForceMatchSequence(g);
    }
  }
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> order(1, 8);
  std::uniform_real_distribution<double> density(0.0, 0.7);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::RandomConnectedGraph(rng, order(rng), density(rng));
    ++checked;
    failures += ComputeMatchSequence(g) != BruteForceMatchSequence(g);
  }
  return {failures == 0, std::to_string(checked) + " graphs, " +
                             std::to_string(failures) + " mismatches"};
}

Outcome RealRootsAndAgreement() {
  int checked = 0, failures = 0;
  double worst = 0;
  for (int n = 4; n <= 10; ++n) {
    for (const Graph& g : EnumerateBicyclic(n)) {
      const MatchSequence s = ComputeMatchSequence(g);
      ++checked;
      const double roots = MatchingEnergyRoots(s).value;
      const double coulson = MatchingEnergyCoulson(s).value;
      worst = std::max(worst, std::abs(roots - coulson));
      if (MatchingPolynomialRealRootCount(s) != n ||
          !(std::abs(roots - coulson) <= 1e-6)) {
        ++failures;
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " graphs, " << failures << " failing, max |roots - coulson| = "
         << worst;
  return {failures == 0, detail.str()};
}

Outcome ClosedForms() {
  int failures = 0;
  double worst = 0;
  for (int n = 5; n <= 30; ++n) {
    const double b333 = MatchingEnergyRoots(Build(MakeBnxyc(3, 3, 3, n - 5)).graph).value;
    const double b33 = MatchingEnergyRoots(Build(MakeBnab(3, 3, n - 5)).graph).value;
    const double d1 = std::abs(ClosedFormEnergy(ClosedFormFamily::kBn333, n) - b333);
    const double d2 = std::abs(ClosedFormEnergy(ClosedFormFamily::kBn33, n) - b33);
    worst = std::max({worst, d1, d2});
    failures += !(d1 <= 1e-9) + !(d2 <= 1e-9);
  }
  const double bowtie =
      std::abs(ClosedFormEnergy(ClosedFormFamily::kBn33, 5) - (2 + 2 * std::sqrt(5.0)));
  std::ostringstream detail;
  detail << "n=5..30, max deviation " << worst << ", bowtie deviation " << bowtie;
  return {failures == 0 && bowtie <= 1e-12, detail.str()};
}

Outcome Recurrences() {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  long identities = 0, failures = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = testing::RandomGraph(rng, order(rng), density(rng));
    const MatchSequence s = ComputeMatchSequence(g);
    for (const auto& [u, v] : g.edges()) {
      const MatchSequence without = ComputeMatchSequence(DeleteEdge(g, u, v));
      const std::vector<Vertex> both = {u, v};
      const MatchSequence removed = ComputeMatchSequence(DeleteVertices(g, both));
      for (long k = 0; k <= g.order() / 2; ++k) {
        ++identities;
        failures += s[k] != without[k] + removed[k - 1];
      }
    }
    for (Vertex u = 0; u < g.order(); ++u) {
      ++identities;
      failures += VertexRecurrence(g, u) != s;
    }
  }
  return {failures == 0, std::to_string(identities) + " identities, " +
                             std::to_string(failures) + " failing"};
}

Outcome EnumerationCounts() {
  Outcome out;
  std::ostringstream detail;
  for (int n = 4; n <= 5; ++n) {
    std::set<std::string> keys;
    for (const Graph& g : testing::LabeledBicyclic(n)) {
      keys.insert(testing::PermutationCanonicalKey(g));
    }
    const std::size_t count = EnumerateBicyclic(n).size();
    detail << "n=" << n << ": " << count << " (oracle " << keys.size() << ") ";
    out.pass = out.pass && count == keys.size();
  }
  // Pinned from the oracle runs.
  const std::vector<std::pair<int, std::size_t>> fixtures = {
      {4, 1}, {5, 5}, {6, 19}, {7, 67}, {8, 236}, {9, 797}};
  for (const auto& [n, expected] : fixtures) {
    const std::size_t count = EnumerateBicyclic(n).size();
    if (count != expected) {
      out.pass = false;
      detail << "n=" << n << ": " << count << " != " << expected << " ";
    }
  }
  if (out.pass) detail << "n=6..9 match fixtures 19 67 236 797";
  out.detail = detail.str();
  return out;
}

}  // namespace
}  // namespace bme

int main() {
  const std::vector<std::pair<const char*, std::function<bme::Outcome()>>> criteria = {
      {"five smallest bicyclic graphs, n=6..10", bme::RankingOfFiveSmallest},
      {"extremal coefficient identities, n=6..30", bme::CoefficientIdentities},
      {"pendant move identity on two-cycle graphs", bme::Lemma31Identity},
      {"pendant move dominance on theta graphs", bme::Lemma32Dominance},
      {"strict decrease when shortening a cycle", bme::StrictDecrease},
      {"matching counts equal brute force, n<=8", bme::OracleEquivalence},
      {"real roots and cross-method energy, n<=10", bme::RealRootsAndAgreement},
      {"closed-form energies, n=5..30", bme::ClosedForms},
      {"edge and vertex recurrences on random graphs", bme::Recurrences},
      {"enumeration counts against the labeled oracle", bme::EnumerationCounts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    bme::Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failed += !outcome.pass;
    std::printf("%s %zu: %s [%.1fs] %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
