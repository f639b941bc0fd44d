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

#include "bme/report.h"

#include <charconv>
#include <cmath>
#include <limits>

#include "bme/enumerate.h"

namespace bme {

using nlohmann::json;

namespace {

json Number(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

std::string Joined(const std::vector<BigInt>& values) {
  std::string out;
  for (const BigInt& v : values) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  return out;
}

std::string Bool(bool value) { return value ? "true" : "false"; }

json QuasiOrderJson(const QuasiOrderResult& r) {
  json out = {{"outcome", QuasiOrderName(r.outcome)}};
  out["witness_k"] = r.witness_k ? json(*r.witness_k) : json(nullptr);
  out["counter_witness_k"] =
      r.counter_witness_k ? json(*r.counter_witness_k) : json(nullptr);
  return out;
}

json ParamsJson(const std::array<int, 3>& params, FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
    case FamilyKind::kStar:
      return {{"n", params[0]}};
    case FamilyKind::kCvC:
    case FamilyKind::kBnab:
    case FamilyKind::kBpnab:
      return {{"a", params[0]}, {"b", params[1]}};
    default:
      return {{"x", params[0]}, {"y", params[1]}, {"c", params[2]}};
  }
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

json BigIntJson(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

json BigIntsJson(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const BigInt& v : values) out.push_back(BigIntJson(v));
  return out;
}

json MpolyJson(const Graph& g) {
  const MatchingPolynomial alpha = ComputeMatchingPolynomial(g);
  return {{"graph6", EmitGraph6(g)},
          {"n", g.order()},
          {"m_sequence", BigIntsJson(alpha.sequence().counts())},
          {"alpha_coefficients", BigIntsJson(alpha.coefficients())}};
}

json EnergyJson(const EnergyResult& result) {
  return {{"me", result.value},
          {"method", EnergyMethodName(result.method)},
          {"error_bound", result.error_bound}};
}

json FamilyJson(const FamilySpec& spec) {
  const Graph g = Build(spec).graph;
  json out = {{"family", FamilyKindName(spec.kind)},
              {"label", FamilyLabel(spec)},
              {"params", ParamsJson(spec.params, spec.kind)},
              {"t", spec.t},
              {"n", g.order()},
              {"edges", g.edge_count()},
              {"graph6", EmitGraph6(g)}};
  if (spec.attach_pos >= 0) out["attach_pos"] = spec.attach_pos;
  return out;
}

json EnumerateJson(int n, const std::vector<Graph>& graphs, bool classify) {
  json items = json::array();
  for (const Graph& g : graphs) {
    json item = {{"graph6", EmitGraph6(g)}};
    if (classify) item["class"] = ClassLabel(Classify(g));
    items.push_back(std::move(item));
  }
  return {{"schema", kReportSchema},
          {"n", n},
          {"count", graphs.size()},
          {"graphs", std::move(items)}};
}

json ReportJson(const Lemma31Report& r) {
  return {{"a", r.a},
          {"b", r.b},
          {"t", r.t},
          {"attach_pos", r.attach_pos},
          {"x", r.x},
          {"y", r.y},
          {"other_cycle", r.other_cycle},
          {"graph6_b", r.graph6_b},
          {"graph6_bp", r.graph6_bp},
          {"difference", BigIntsJson(r.difference)},
          {"predicted", BigIntsJson(r.predicted)},
          {"identity_holds", r.identity_holds},
          {"me_b", r.energy_b},
          {"me_bp", r.energy_bp},
          {"energy_order_holds", r.energy_order_holds},
          {"pass", r.pass()}};
}

json ReportJson(const Lemma32Report& r) {
  return {{"x", r.x},
          {"y", r.y},
          {"c", r.c},
          {"t", r.t},
          {"position", r.position},
          {"attach_pos", r.attach_pos},
          {"yc_at_least_6", r.yc_at_least_6},
          {"graph6_b", r.graph6_b},
          {"graph6_bp", r.graph6_bp},
          {"difference", BigIntsJson(r.difference)},
          {"dominance_holds", r.dominance_holds},
          {"h_minus_t", BigIntsJson(r.h_minus_t)},
          {"difference_identity_holds", r.difference_identity_holds},
          {"expansion", BigIntsJson(r.expansion)},
          {"expansion_holds", r.expansion_holds},
          {"expansion_relabeled", r.expansion_relabeled},
          {"expansion_literal_holds", r.expansion_literal_holds},
          {"me_b", r.energy_b},
          {"me_bp", r.energy_bp},
          {"pass", r.pass()}};
}

json ReportJson(const Lemma33Report& r) {
  json classes = json::array();
  for (const Lemma33ClassResult& c : r.classes) {
    classes.push_back({{"class", c.class_label},
                       {"graph_count", c.graph_count},
                       {"expected", c.expected_label},
                       {"expected_graph6", c.expected_graph6},
                       {"minimizer_graph6", c.minimizer_graph6},
                       {"min_me", c.min_energy},
                       {"runner_up_me", Number(c.runner_up_energy)},
                       {"minimizer_is_expected", c.minimizer_is_expected},
                       {"unique", c.unique},
                       {"pass", c.pass()}});
  }
  return {{"n", r.n}, {"classes", std::move(classes)}, {"pass", r.pass()}};
}

json ReportJson(const StrictDecreaseReport& r) {
  return {{"smaller", r.smaller_label},
          {"larger", r.larger_label},
          {"graph6_smaller", r.graph6_smaller},
          {"graph6_larger", r.graph6_larger},
          {"m_sequence_smaller", BigIntsJson(r.smaller_sequence)},
          {"m_sequence_larger", BigIntsJson(r.larger_sequence)},
          {"comparison", QuasiOrderJson(r.comparison)},
          {"me_smaller", r.energy_smaller},
          {"me_larger", r.energy_larger},
          {"pass", r.pass()}};
}

json ReportJson(const RankReport& r) {
  json entries = json::array();
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const RankEntry& e = r.entries[i];
    entries.push_back({{"rank", i + 1},
                       {"graph6", e.graph6},
                       {"class", ClassLabel(e.cls)},
                       {"m_sequence", BigIntsJson(e.sequence.counts())},
                       {"me", e.energy},
                       {"tie", e.tied_with_previous}});
  }
  json five = json::array();
  for (const ExtremalSlot& s : r.five_smallest) {
    json item = {{"family", FamilyJson(s.spec)},
                 {"label", s.label},
                 {"graph6", s.graph6},
                 {"m_sequence", BigIntsJson(s.sequence.counts())},
                 {"me", s.energy},
                 {"actual_rank", s.actual_rank + 1},
                 {"graph6_at_slot", s.graph6_at_slot},
                 {"matches", s.matches}};
    five.push_back(std::move(item));
  }
  return {{"schema", kReportSchema},
          {"n", r.n},
          {"count", r.entries.size()},
          {"identified", r.identified},
          {"strictly_separated", r.strictly_separated},
          {"five_smallest", std::move(five)},
          {"entries", std::move(entries)}};
}

json ReportJson(const Theorem36Report& r) {
  json ranks = json::array();
  for (const RankReport& rank : r.ranks) {
    json summary = ReportJson(rank);
    summary.erase("schema");
    // The full ranking is available from `rank`; keep the head here.
    json head = json::array();
    for (std::size_t i = 0; i < summary["entries"].size() && i < 6; ++i) {
      head.push_back(summary["entries"][i]);
    }
    summary["entries"] = std::move(head);
    summary["pass"] = rank.identified && rank.strictly_separated;
    ranks.push_back(std::move(summary));
  }
  json coefficients = json::array();
  for (const CoefficientCheck& c : r.coefficients) {
    coefficients.push_back({{"n", c.n},
                            {"label", c.label},
                            {"expected", BigIntsJson(c.expected)},
                            {"actual", BigIntsJson(c.actual)},
                            {"holds", c.holds}});
  }
  return {{"schema", kReportSchema},
          {"target", "thm36"},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"ranking_pass", r.ranking_pass()},
          {"coefficients_pass", r.coefficients_pass()},
          {"pass", r.pass()},
          {"ranks", std::move(ranks)},
          {"coefficients", std::move(coefficients)}};
}

std::string MpolyCsvHeader() { return "graph6,n,m_sequence,alpha_coefficients\n"; }

std::string MpolyCsvRow(const Graph& g) {
  const MatchingPolynomial alpha = ComputeMatchingPolynomial(g);
  return EmitGraph6(g) + "," + std::to_string(g.order()) + "," +
         Joined(alpha.sequence().counts()) + "," + Joined(alpha.coefficients()) +
         "\n";
}

std::string RankCsv(const RankReport& r) {
  std::string out = "rank,graph6,class,m_sequence,me,tie\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const RankEntry& e = r.entries[i];
    out += std::to_string(i + 1) + "," + e.graph6 + "," + ClassLabel(e.cls) +
           "," + Joined(e.sequence.counts()) + "," + FormatDouble(e.energy) +
           "," + Bool(e.tied_with_previous) + "\n";
  }
  return out;
}

std::string ReportCsvHeader(const Lemma31Report&) {
  return "a,b,t,attach_pos,x,y,graph6_b,graph6_bp,identity_holds,me_b,me_bp,"
         "pass\n";
}

std::string ReportCsvRow(const Lemma31Report& r) {
  return std::to_string(r.a) + "," + std::to_string(r.b) + "," +
         std::to_string(r.t) + "," + std::to_string(r.attach_pos) + "," +
         std::to_string(r.x) + "," + std::to_string(r.y) + "," + r.graph6_b +
         "," + r.graph6_bp + "," + Bool(r.identity_holds) + "," +
         FormatDouble(r.energy_b) + "," + FormatDouble(r.energy_bp) + "," +
         Bool(r.pass()) + "\n";
}

std::string ReportCsvHeader(const Lemma32Report&) {
  return "x,y,c,t,position,graph6_b,graph6_bp,dominance_holds,"
         "difference_identity_holds,expansion_holds,me_b,me_bp,pass\n";
}

std::string ReportCsvRow(const Lemma32Report& r) {
  return std::to_string(r.x) + "," + std::to_string(r.y) + "," +
         std::to_string(r.c) + "," + std::to_string(r.t) + "," +
         std::to_string(r.position) + "," + r.graph6_b + "," + r.graph6_bp +
         "," + Bool(r.dominance_holds) + "," +
         Bool(r.difference_identity_holds) + "," + Bool(r.expansion_holds) +
         "," + FormatDouble(r.energy_b) + "," + FormatDouble(r.energy_bp) +
         "," + Bool(r.pass()) + "\n";
}

std::string ReportCsvHeader(const Lemma33Report&) {
  return "n,class,graph_count,expected,expected_graph6,minimizer_graph6,"
         "min_me,unique,pass\n";
}

std::string ReportCsvRow(const Lemma33Report& r) {
  std::string out;
  for (const Lemma33ClassResult& c : r.classes) {
    out += std::to_string(r.n) + ",\"" + c.class_label + "\"," +
           std::to_string(c.graph_count) + ",\"" + c.expected_label + "\"," +
           c.expected_graph6 + "," + c.minimizer_graph6 + "," +
           FormatDouble(c.min_energy) + "," + Bool(c.unique) + "," +
           Bool(c.pass()) + "\n";
  }
  return out;
}

std::string ReportCsvHeader(const StrictDecreaseReport&) {
  return "smaller,larger,graph6_smaller,graph6_larger,outcome,witness_k,"
         "me_smaller,me_larger,pass\n";
}

std::string ReportCsvRow(const StrictDecreaseReport& r) {
  return "\"" + r.smaller_label + "\",\"" + r.larger_label + "\"," +
         r.graph6_smaller + "," + r.graph6_larger + "," +
         std::string(QuasiOrderName(r.comparison.outcome)) + "," +
         (r.comparison.witness_k ? std::to_string(*r.comparison.witness_k)
                                 : std::string()) +
         "," + FormatDouble(r.energy_smaller) + "," +
         FormatDouble(r.energy_larger) + "," + Bool(r.pass()) + "\n";
}

std::string Theorem36Csv(const Theorem36Report& r) {
  std::string out = "n,slot,label,graph6,me,actual_rank,graph6_at_slot,matches\n";
  for (const RankReport& rank : r.ranks) {
    for (std::size_t i = 0; i < rank.five_smallest.size(); ++i) {
      const ExtremalSlot& s = rank.five_smallest[i];
      out += std::to_string(rank.n) + "," + std::to_string(i + 1) + ",\"" +
             s.label + "\"," + s.graph6 + "," + FormatDouble(s.energy) + "," +
             std::to_string(s.actual_rank + 1) + "," + s.graph6_at_slot + "," +
             Bool(s.matches) + "\n";
    }
  }
  return out;
}

}  // namespace bme
