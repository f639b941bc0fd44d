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

#include "bme/order.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "bme/energy.h"
#include "bme/error.h"

namespace bme {

namespace {

struct Evaluated {
  Graph graph;
  MatchSequence sequence;
  double energy = 0;
};

Evaluated Evaluate(const Graph& g) {
  MatchSequence s = ComputeMatchSequence(g);
  const double me = MatchingEnergyRoots(s).value;
  return {g, std::move(s), me};
}

long MaxLength(const MatchSequence& a, const MatchSequence& b) {
  return static_cast<long>(std::max(a.size(), b.size()));
}

std::vector<BigInt> Difference(const MatchSequence& a, const MatchSequence& b) {
  std::vector<BigInt> out;
  for (long k = 0; k < MaxLength(a, b); ++k) out.push_back(a[k] - b[k]);
  return out;
}

StrictDecreaseReport CompareFamilies(const FamilySpec& smaller,
                                     const FamilySpec& larger) {
  const Evaluated lo = Evaluate(Build(smaller).graph);
  const Evaluated hi = Evaluate(Build(larger).graph);
  StrictDecreaseReport report;
  report.smaller_label = FamilyLabel(smaller);
  report.larger_label = FamilyLabel(larger);
  report.graph6_smaller = EmitGraph6(lo.graph);
  report.graph6_larger = EmitGraph6(hi.graph);
  report.smaller_sequence = lo.sequence.counts();
  report.larger_sequence = hi.sequence.counts();
  report.comparison = CompareMatchSequences(lo.sequence, hi.sequence);
  report.energy_smaller = lo.energy;
  report.energy_larger = hi.energy;
  return report;
}

}  // namespace

std::string_view QuasiOrderName(QuasiOrder outcome) {
  switch (outcome) {
    case QuasiOrder::kEqual:
      return "equal";
    case QuasiOrder::kStrictlyLess:
      return "strictly_less";
    case QuasiOrder::kStrictlyGreater:
      return "strictly_greater";
    case QuasiOrder::kIncomparable:
      return "incomparable";
  }
  return "?";
}

QuasiOrderResult CompareMatchSequences(const MatchSequence& s1,
                                       const MatchSequence& s2) {
  std::optional<int> first_greater;
  std::optional<int> first_less;
  for (long k = 0; k < MaxLength(s1, s2); ++k) {
    const BigInt a = s1[k];
    const BigInt b = s2[k];
    if (a > b && !first_greater) first_greater = static_cast<int>(k);
    if (a < b && !first_less) first_less = static_cast<int>(k);
  }
  QuasiOrderResult result;
  if (first_greater && first_less) {
    result.outcome = QuasiOrder::kIncomparable;
    result.witness_k = first_greater;
    result.counter_witness_k = first_less;
  } else if (first_greater) {
    result.outcome = QuasiOrder::kStrictlyGreater;
    result.witness_k = first_greater;
  } else if (first_less) {
    result.outcome = QuasiOrder::kStrictlyLess;
    result.witness_k = first_less;
  }
  return result;
}

bool EnergyStrictlyLess(const MatchSequence& a, double energy_a,
                        const MatchSequence& b, double energy_b) {
  switch (CompareMatchSequences(a, b).outcome) {
    case QuasiOrder::kStrictlyLess:
      return true;
    case QuasiOrder::kEqual:
    case QuasiOrder::kStrictlyGreater:
      return false;
    case QuasiOrder::kIncomparable:
      return energy_b - energy_a > kEnergyTieThreshold;
  }
  return false;
}

BigInt PathUnionCount(const std::vector<int>& orders, long k) {
  if (k < 0) return 0;
  Graph g;
  for (int order : orders) {
    if (order < 0) return 0;
    if (order > 0) g = DisjointUnion(g, Path(order).graph);
  }
  return ComputeMatchSequence(g)[k];
}

Lemma31Report VerifyLemma31(int a, int b, int t, int attach_pos) {
  if (a < 3 || b < 3 || t < 0) {
    throw ArgumentError("lemma31 needs a, b >= 3 and t >= 0");
  }
  Lemma31Report r;
  r.a = a;
  r.b = b;
  r.t = t;
  r.attach_pos = attach_pos;
  if (attach_pos >= 1 && attach_pos <= a - 1) {
    r.x = attach_pos + 1;
    r.y = a - attach_pos + 1;
    r.other_cycle = b;
  } else if (attach_pos >= a && attach_pos <= a + b - 2) {
    const int j = attach_pos - a + 1;
    r.x = j + 1;
    r.y = b - j + 1;
    r.other_cycle = a;
  } else {
    throw ArgumentError("attach_pos must be a non-hub vertex of C_a v C_b");
  }
  const Evaluated base = Evaluate(Build(MakeBnab(a, b, t)).graph);
  const Evaluated moved = Evaluate(Build(MakeBpnab(a, b, t, attach_pos)).graph);
  r.graph6_b = EmitGraph6(base.graph);
  r.graph6_bp = EmitGraph6(moved.graph);
  r.difference = Difference(moved.sequence, base.sequence);
  r.identity_holds = true;
  for (long k = 0; k < static_cast<long>(r.difference.size()); ++k) {
    const BigInt rhs =
        2 * t * PathUnionCount({r.x - 2, r.y - 2, r.other_cycle - 2}, k - 2);
    r.predicted.push_back(rhs);
    if (rhs != r.difference[k]) r.identity_holds = false;
  }
  r.energy_b = base.energy;
  r.energy_bp = moved.energy;
  r.energy_order_holds = r.energy_b <= r.energy_bp + kEnergyTieThreshold;
  return r;
}

Lemma32Report VerifyLemma32(int x, int y, int c, int t, int position) {
  if (x < 3 || t < 0) throw ArgumentError("lemma32 needs x >= 3 and t >= 0");
  Lemma32Report r;
  r.x = x;
  r.y = y;
  r.c = c;
  r.t = t;
  r.position = position;
  r.attach_pos = ThetaPathXVertex(x, position);
  r.yc_at_least_6 = y * c >= 6;

  const FamilyGraph theta = Theta(x, y, c);
  const Evaluated base = Evaluate(Build(MakeBnxyc(x, y, c, t)).graph);
  const Evaluated moved =
      Evaluate(Build(MakeBpnxyc(x, y, c, t, r.attach_pos)).graph);
  r.graph6_b = EmitGraph6(base.graph);
  r.graph6_bp = EmitGraph6(moved.graph);
  r.difference = Difference(moved.sequence, base.sequence);
  r.dominance_holds = std::all_of(r.difference.begin(), r.difference.end(),
                                  [](const BigInt& d) { return d >= 0; });

  // H = B' minus the host and its pendants; T = B minus hub 0 and pendants.
  const MatchSequence h = ComputeMatchSequence(DeleteVertex(theta.graph, r.attach_pos));
  const MatchSequence tree = ComputeMatchSequence(DeleteVertex(theta.graph, 0));
  r.difference_identity_holds = true;
  for (long k = 0; k < static_cast<long>(r.difference.size()); ++k) {
    const BigInt ht = h[k - 1] - tree[k - 1];
    r.h_minus_t.push_back(ht);
    if (r.difference[k] != t * ht) r.difference_identity_holds = false;
  }

  const int a = position;
  auto expansion = [&](int yy, int cc, long k) -> BigInt {
    return PathUnionCount({cc - 3, a - 1, yy - 3, x - a - 2}, k - 3) +
           PathUnionCount({cc - 3, a - 1, yy - 1, x - a - 2}, k - 2) +
           PathUnionCount({cc - 4, a - 1, yy - 2, x - a - 2}, k - 3);
  };
  // Indexing: h_minus_t[k] is the (k-1)-matching difference, so the sum is
  // evaluated with the outer index k.
  const bool relabel = c == 2;
  r.expansion_relabeled = relabel;
  const int yy = relabel ? c : y;
  const int cc = relabel ? y : c;
  r.expansion_holds = true;
  r.expansion_literal_holds = true;
  for (long k = 0; k < static_cast<long>(r.h_minus_t.size()); ++k) {
    const BigInt value = expansion(yy, cc, k);
    r.expansion.push_back(value);
    if (value != r.h_minus_t[k]) r.expansion_holds = false;
    if (expansion(y, c, k) != r.h_minus_t[k]) r.expansion_literal_holds = false;
  }
  r.energy_b = base.energy;
  r.energy_bp = moved.energy;
  return r;
}

StrictDecreaseReport VerifyTheorem34(int a, int b, int t) {
  if (a < 4 || b < 3 || t < 1) {
    throw ArgumentError("theorem 3.4 sweep needs a >= 4, b >= 3, t >= 1");
  }
  return CompareFamilies(MakeBnab(a - 1, b, t + 1), MakeBnab(a, b, t));
}

StrictDecreaseReport VerifyTheorem35(int x, int y, int c, int t) {
  if (x < 4 || y < 2 || c < 2 || y * c < 6 || t < 1) {
    throw ArgumentError(
        "theorem 3.5 sweep needs x >= 4, y, c >= 2, y*c >= 6, t >= 1");
  }
  return CompareFamilies(MakeBnxyc(x - 1, y, c, t + 1), MakeBnxyc(x, y, c, t));
}

FamilySpec ClassMinimizerSpec(const BicyclicClass& cls, int n) {
  const auto [p0, p1, p2] = cls.params;
  if (cls.kind == BicyclicKind::kTwoCycles) {
    return MakeBnab(p0, p1, n - (p0 + p1 - 1));
  }
  return MakeBnxyc(p0, p1, p2, n - (p0 + p1 + p2 - 4));
}

bool Lemma33Report::pass() const {
  return std::all_of(classes.begin(), classes.end(),
                     [](const auto& c) { return c.pass(); });
}

Lemma33Report VerifyLemma33(int n) {
  if (n < 5) throw ArgumentError("lemma33 needs n >= 5");
  struct Member {
    std::string graph6;
    MatchSequence sequence;
    double energy;
  };
  std::map<BicyclicClass, std::vector<Member>> classes;
  for (const Graph& g : EnumerateBicyclic(n)) {
    BicyclicClass cls = Classify(g);
    if (cls.kind == BicyclicKind::kTwoCycles) cls.params[2] = -1;
    MatchSequence sequence = ComputeMatchSequence(g);
    const double energy = MatchingEnergyRoots(sequence).value;
    classes[cls].push_back({EmitGraph6(g), std::move(sequence), energy});
  }
  Lemma33Report report;
  report.n = n;
  for (auto& [cls, members] : classes) {
    std::sort(members.begin(), members.end(), [](const auto& l, const auto& r) {
      return l.energy < r.energy || (l.energy == r.energy && l.graph6 < r.graph6);
    });
    const FamilySpec spec = ClassMinimizerSpec(cls, n);
    const Graph expected = ComputeCanonical(Build(spec).graph).graph;
    Lemma33ClassResult result;
    result.class_label = cls.kind == BicyclicKind::kTwoCycles
                             ? "two_cycles(" + std::to_string(cls.params[0]) +
                                   "," + std::to_string(cls.params[1]) + ")"
                             : ClassLabel(cls);
    result.graph_count = static_cast<int>(members.size());
    result.expected_label = FamilyLabel(spec);
    result.expected_graph6 = EmitGraph6(expected);
    result.minimizer_graph6 = members.front().graph6;
    result.min_energy = members.front().energy;
    result.runner_up_energy = members.size() > 1
                                  ? members[1].energy
                                  : std::numeric_limits<double>::quiet_NaN();
    result.minimizer_is_expected =
        result.minimizer_graph6 == result.expected_graph6;
    result.unique =
        members.size() == 1 ||
        EnergyStrictlyLess(members[0].sequence, members[0].energy,
                           members[1].sequence, members[1].energy);
    report.classes.push_back(std::move(result));
  }
  return report;
}

}  // namespace bme
