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

#include "bme/bme.h"

#include <cctype>
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "bme/energy.h"
#include "bme/enumerate.h"
#include "bme/error.h"
#include "bme/families.h"
#include "bme/graph.h"
#include "bme/matching.h"
#include "bme/rank.h"
#include "bme/report.h"
#include "bme/sweep.h"

struct bme_graph {
  bme::Graph graph;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
bme_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return BME_OK;
  } catch (const bme::ArgumentError& e) {
    last_error = e.what();
    return BME_ERR_ARGUMENT;
  } catch (const bme::StructuralError& e) {
    last_error = e.what();
    return BME_ERR_STRUCTURE;
  } catch (const bme::CapacityError& e) {
    last_error = e.what();
    return BME_ERR_CAPACITY;
  } catch (const bme::ParseError& e) {
    last_error = e.what();
    return BME_ERR_PARSE;
  } catch (const bme::NumericError& e) {
    last_error = std::string(e.what()) + " (partial estimate " +
                 bme::FormatDouble(e.partial_estimate()) + ")";
    return BME_ERR_NUMERIC;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BME_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return BME_ERR_INTERNAL;
  }
}

char* Copy(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) throw bme::ArgumentError(what);
}

bme::IntRange Range(bme_range r) { return {r.lo, r.hi}; }

bme::FamilySpec Spec(const char* kind, const int* params, int param_count,
                     int t, int attach_pos) {
  Require(kind != nullptr, "family kind is null");
  Require(param_count >= 0 && param_count <= 3 &&
              (param_count == 0 || params != nullptr),
          "family takes 1 to 3 parameters");
  bme::FamilySpec spec;
  spec.kind = bme::ParseFamilyKind(kind);
  spec.params = {0, 0, 0};
  for (int i = 0; i < param_count; ++i) spec.params[i] = params[i];
  spec.t = t;
  spec.attach_pos = attach_pos;
  return spec;
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string Joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

std::string EnergyCsvRow(const std::string& graph6,
                         const bme::EnergyResult& r) {
  return graph6 + "," + std::string(bme::EnergyMethodName(r.method)) + "," +
         bme::FormatDouble(r.value) + "," + bme::FormatDouble(r.error_bound) +
         "\n";
}

template <typename Report>
std::string Render(const std::string& target,
                   const std::vector<Report>& reports, bme_format format) {
  Require(format != BME_FORMAT_TEXT, "verify supports json or csv");
  if (format == BME_FORMAT_CSV) return bme::VerifyCsv(reports);
  return Dump(bme::VerifyJson(target, reports));
}

}  // namespace

extern "C" {

const char* bme_version(void) { return "1.0.0"; }

const char* bme_status_name(bme_status status) {
  switch (status) {
    case BME_OK:
      return "ok";
    case BME_ERR_ARGUMENT:
      return "argument";
    case BME_ERR_STRUCTURE:
      return "structure";
    case BME_ERR_CAPACITY:
      return "capacity";
    case BME_ERR_PARSE:
      return "parse";
    case BME_ERR_NUMERIC:
      return "numeric";
    case BME_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* bme_last_error(void) { return last_error.c_str(); }

void bme_string_free(char* s) { delete[] s; }

bme_status bme_graph_from_graph6(const char* text, bme_graph** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    std::string line(text);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.pop_back();
    }
    *out = new bme_graph{bme::ParseGraph6(line)};
  });
}

bme_status bme_graph_from_edges(int order, const int* endpoints,
                                size_t edge_count, bme_graph** out) {
  return Guard([&] {
    Require(out != nullptr && (edge_count == 0 || endpoints != nullptr),
            "null argument");
    std::vector<bme::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) {
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    }
    *out = new bme_graph{bme::Graph::FromEdges(order, edges)};
  });
}

void bme_graph_free(bme_graph* g) { delete g; }

int bme_graph_order(const bme_graph* g) { return g ? g->graph.order() : -1; }

int bme_graph_edge_count(const bme_graph* g) {
  return g ? static_cast<int>(g->graph.edge_count()) : -1;
}

bme_status bme_graph_to_graph6(const bme_graph* g, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = Copy(bme::EmitGraph6(g->graph));
  });
}

bme_status bme_graph_canonical(const bme_graph* g, bme_graph** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = new bme_graph{bme::ComputeCanonical(g->graph).graph};
  });
}

bme_status bme_family_build(const char* kind, const int* params,
                            int param_count, int t, int attach_pos,
                            bme_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const bme::FamilySpec spec = Spec(kind, params, param_count, t, attach_pos);
    *out = new bme_graph{bme::Build(spec).graph};
  });
}

bme_status bme_family_describe(const char* kind, const int* params,
                               int param_count, int t, int attach_pos,
                               bme_format format, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const bme::FamilySpec spec = Spec(kind, params, param_count, t, attach_pos);
    const nlohmann::json j = bme::FamilyJson(spec);
    std::string text;
    switch (format) {
      case BME_FORMAT_TEXT:
        text = j["graph6"].get<std::string>() + "\n";
        break;
      case BME_FORMAT_CSV:
        text = "label,n,edges,graph6\n\"" + j["label"].get<std::string>() +
               "\"," + std::to_string(j["n"].get<int>()) + "," +
               std::to_string(j["edges"].get<int>()) + "," +
               j["graph6"].get<std::string>() + "\n";
        break;
      case BME_FORMAT_JSON:
        text = j.dump() + "\n";
        break;
    }
    *out = Copy(text);
  });
}

bme_status bme_match_sequence(const bme_graph* g, char** counts) {
  return Guard([&] {
    Require(g != nullptr && counts != nullptr, "null argument");
    *counts = Copy(Joined(bme::ComputeMatchSequence(g->graph).ToStrings()));
  });
}

bme_status bme_mpoly(const bme_graph* g, bme_format format, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    Require(format != BME_FORMAT_TEXT, "mpoly supports json or csv");
    *out = Copy(format == BME_FORMAT_CSV ? bme::MpolyCsvRow(g->graph)
                                         : bme::MpolyJson(g->graph).dump() + "\n");
  });
}

const char* bme_mpoly_csv_header(void) {
  static const std::string header = bme::MpolyCsvHeader();
  return header.c_str();
}

bme_status bme_me_value(const bme_graph* g, bme_method method,
                        double tolerance, double* value, double* error_bound) {
  return Guard([&] {
    Require(g != nullptr && value != nullptr, "null argument");
    Require(method == BME_METHOD_ROOTS || method == BME_METHOD_COULSON ||
                method == BME_METHOD_BOTH,
            "unknown method");
    const bme::MatchSequence s = bme::ComputeMatchSequence(g->graph);
    const bme::EnergyResult r =
        method == BME_METHOD_COULSON
            ? bme::MatchingEnergyCoulson(
                  s, tolerance > 0 ? tolerance : bme::kCoulsonTolerance)
            : bme::MatchingEnergyRoots(
                  s, tolerance > 0 && method == BME_METHOD_ROOTS
                         ? tolerance
                         : bme::kRootTolerance);
    *value = r.value;
    if (error_bound) *error_bound = r.error_bound;
  });
}

bme_status bme_me(const bme_graph* g, bme_method method, double tolerance,
                  bme_format format, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    Require(format != BME_FORMAT_TEXT, "me supports json or csv");
    const bme::MatchSequence s = bme::ComputeMatchSequence(g->graph);
    const std::string graph6 = bme::EmitGraph6(g->graph);
    if (method == BME_METHOD_ROOTS || method == BME_METHOD_COULSON) {
      const bme::EnergyResult r =
          method == BME_METHOD_ROOTS
              ? bme::MatchingEnergyRoots(
                    s, tolerance > 0 ? tolerance : bme::kRootTolerance)
              : bme::MatchingEnergyCoulson(
                    s, tolerance > 0 ? tolerance : bme::kCoulsonTolerance);
      if (format == BME_FORMAT_CSV) {
        *out = Copy(EnergyCsvRow(graph6, r));
        return;
      }
      nlohmann::json j = {{"graph6", graph6}};
      j.update(bme::EnergyJson(r));
      *out = Copy(j.dump() + "\n");
      return;
    }
    Require(method == BME_METHOD_BOTH, "unknown method");
    const double coulson_tolerance =
        tolerance > 0 ? tolerance : bme::kCoulsonTolerance;
    const bme::EnergyResult roots = bme::MatchingEnergyRoots(s);
    const bme::EnergyResult coulson =
        bme::MatchingEnergyCoulson(s, coulson_tolerance);
    if (format == BME_FORMAT_CSV) {
      *out = Copy(EnergyCsvRow(graph6, roots) + EnergyCsvRow(graph6, coulson));
      return;
    }
    const double difference = coulson.value - roots.value;
    nlohmann::json j = {{"graph6", graph6},
                        {"me", roots.value},
                        {"method", "both"},
                        {"error_bound", roots.error_bound},
                        {"roots", bme::EnergyJson(roots)},
                        {"coulson", bme::EnergyJson(coulson)},
                        {"difference", difference},
                        {"agree", std::abs(difference) <= coulson_tolerance}};
    *out = Copy(j.dump() + "\n");
  });
}

const char* bme_me_csv_header(void) { return "graph6,method,me,error_bound\n"; }

bme_status bme_classify(const bme_graph* g, char** label) {
  return Guard([&] {
    Require(g != nullptr && label != nullptr, "null argument");
    *label = Copy(bme::ClassLabel(bme::Classify(g->graph)));
  });
}

bme_status bme_enumerate(int n, int classify, bme_format format, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const std::vector<bme::Graph> graphs = bme::EnumerateBicyclic(n);
    std::string text;
    if (format == BME_FORMAT_JSON) {
      text = Dump(bme::EnumerateJson(n, graphs, classify != 0));
    } else {
      if (format == BME_FORMAT_CSV) text = classify ? "graph6,class\n" : "graph6\n";
      const char separator = format == BME_FORMAT_CSV ? ',' : ' ';
      for (const bme::Graph& g : graphs) {
        text += bme::EmitGraph6(g);
        if (classify) {
          text += separator;
          text += bme::ClassLabel(bme::Classify(g));
        }
        text += '\n';
      }
    }
    *out = Copy(text);
  });
}

bme_status bme_rank(int n, int workers, bme_format format, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(format != BME_FORMAT_TEXT, "rank supports json or csv");
    const bme::RankReport report = bme::Rank(n, workers);
    *out = Copy(format == BME_FORMAT_CSV ? bme::RankCsv(report)
                                         : Dump(bme::ReportJson(report)));
  });
}

bme_status bme_parse_range(const char* text, bme_range* out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    const bme::IntRange r = bme::ParseIntRange(text);
    *out = {r.lo, r.hi};
  });
}

bme_status bme_verify_lemma31(bme_range a, bme_range b, bme_range t,
                              bme_format format, char** out, int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    const auto reports = bme::SweepLemma31(Range(a), Range(b), Range(t));
    *out = Copy(Render("lemma31", reports, format));
    *passed = bme::AllPass(reports);
  });
}

bme_status bme_verify_lemma32(bme_range x, bme_range yc, bme_range t,
                              bme_format format, char** out, int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    const auto reports = bme::SweepLemma32(Range(x), Range(yc), Range(t));
    *out = Copy(Render("lemma32", reports, format));
    *passed = bme::AllPass(reports);
  });
}

bme_status bme_verify_lemma33(bme_range n, bme_format format, char** out,
                              int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    const auto reports = bme::SweepLemma33(Range(n));
    *out = Copy(Render("lemma33", reports, format));
    *passed = bme::AllPass(reports);
  });
}

bme_status bme_verify_thm34(bme_range a, bme_range b, bme_range t,
                            bme_format format, char** out, int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    const auto reports = bme::SweepTheorem34(Range(a), Range(b), Range(t));
    *out = Copy(Render("thm34", reports, format));
    *passed = bme::AllPass(reports);
  });
}

bme_status bme_verify_thm35(bme_range x, bme_range yc, bme_range t,
                            bme_format format, char** out, int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    const auto reports = bme::SweepTheorem35(Range(x), Range(yc), Range(t));
    *out = Copy(Render("thm35", reports, format));
    *passed = bme::AllPass(reports);
  });
}

bme_status bme_verify_thm36(bme_range n, int coefficient_n_max, int workers,
                            bme_format format, char** out, int* passed) {
  return Guard([&] {
    Require(out != nullptr && passed != nullptr, "null argument");
    Require(format != BME_FORMAT_TEXT, "verify supports json or csv");
    const bme::Theorem36Report report =
        bme::VerifyTheorem36(n.lo, n.hi, coefficient_n_max, workers);
    *out = Copy(format == BME_FORMAT_CSV ? bme::Theorem36Csv(report)
                                         : Dump(bme::ReportJson(report)));
    *passed = report.pass();
  });
}

}  // extern "C"
