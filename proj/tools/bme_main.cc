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

// Command-line front end. Talks to the library only through bme.h.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bme/bme.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct Options {
  std::string format;  // empty: per-command default
  std::string method = "roots";
  double tolerance = 0;
  int workers = 1;
  std::vector<std::string> graphs;

  // family
  std::string kind;
  int n = 0;
  int a = 0, b = 0, x = 0, y = 0, c = 0;
  int t = 0;
  int attach_pos = -1;

  bool classify = false;

  // verify
  std::string target;
  std::string n_range;
  std::string a_range = "3:7", b_range = "3:7", t_range;
  std::string x_range = "3:7", yc_range = "2:7";
  int coefficient_n_max = 30;
};

struct GraphDeleter {
  void operator()(bme_graph* g) const { bme_graph_free(g); }
};
using GraphPtr = std::unique_ptr<bme_graph, GraphDeleter>;

int Fail(bme_status status) {
  std::cerr << "bme: " << bme_status_name(status) << " error: "
            << bme_last_error() << "\n";
  switch (status) {
    case BME_ERR_ARGUMENT:
    case BME_ERR_CAPACITY:
    case BME_ERR_PARSE:
    case BME_ERR_STRUCTURE:
      return kExitUsage;
    default:
      return kExitError;
  }
}

// Prints and frees a library string.
void Emit(char* text) {
  std::fputs(text, stdout);
  bme_string_free(text);
}

bme_format Format(const std::string& name, bme_format fallback) {
  if (name == "json") return BME_FORMAT_JSON;
  if (name == "csv") return BME_FORMAT_CSV;
  if (name == "text") return BME_FORMAT_TEXT;
  return fallback;
}

bme_method Method(const std::string& name) {
  if (name == "coulson") return BME_METHOD_COULSON;
  if (name == "both") return BME_METHOD_BOTH;
  return BME_METHOD_ROOTS;
}

// graph6 strings from the positional arguments, or stdin lines.
std::vector<std::string> InputGraphs(const Options& o) {
  if (!o.graphs.empty()) return o.graphs;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

template <typename Fn>
int ForEachGraph(const Options& o, const char* csv_header, Fn&& fn) {
  const bme_format format = Format(o.format, BME_FORMAT_JSON);
  if (format == BME_FORMAT_CSV) std::fputs(csv_header, stdout);
  for (const std::string& text : InputGraphs(o)) {
    bme_graph* raw = nullptr;
    if (bme_status s = bme_graph_from_graph6(text.c_str(), &raw); s != BME_OK) {
      return Fail(s);
    }
    GraphPtr g(raw);
    char* out = nullptr;
    if (bme_status s = fn(g.get(), format, &out); s != BME_OK) return Fail(s);
    Emit(out);
  }
  return kExitOk;
}

int RunFamily(const Options& o) {
  std::vector<int> params;
  const std::string& k = o.kind;
  if (k == "path" || k == "cycle" || k == "star") {
    params = {o.n};
  } else if (k == "cvc" || k == "B_nab_t" || k == "Bp_nab_t") {
    params = {o.a, o.b};
  } else {
    params = {o.x, o.y, o.c};
  }
  char* out = nullptr;
  const bme_status s = bme_family_describe(
      k.c_str(), params.data(), static_cast<int>(params.size()), o.t,
      o.attach_pos, Format(o.format, BME_FORMAT_TEXT), &out);
  if (s != BME_OK) return Fail(s);
  Emit(out);
  return kExitOk;
}

bme_range RangeOf(const std::string& text) {
  bme_range r{0, -1};
  if (bme_status s = bme_parse_range(text.c_str(), &r); s != BME_OK) {
    throw CLI::ValidationError(bme_last_error());
  }
  return r;
}

int RunVerify(const Options& o) {
  const bme_format format = Format(o.format, BME_FORMAT_JSON);
  char* out = nullptr;
  int passed = 0;
  bme_status s = BME_OK;
  const std::string& target = o.target;
  if (target == "lemma31") {
    s = bme_verify_lemma31(RangeOf(o.a_range), RangeOf(o.b_range),
                           RangeOf(o.t_range.empty() ? "1:4" : o.t_range),
                           format, &out, &passed);
  } else if (target == "lemma32") {
    s = bme_verify_lemma32(RangeOf(o.x_range), RangeOf(o.yc_range),
                           RangeOf(o.t_range.empty() ? "1:3" : o.t_range),
                           format, &out, &passed);
  } else if (target == "lemma33") {
    s = bme_verify_lemma33(RangeOf(o.n_range.empty() ? "5:10" : o.n_range),
                           format, &out, &passed);
  } else if (target == "thm34") {
    s = bme_verify_thm34(RangeOf(o.a_range == "3:7" ? "4:7" : o.a_range),
                         RangeOf(o.b_range),
                         RangeOf(o.t_range.empty() ? "1:3" : o.t_range),
                         format, &out, &passed);
  } else if (target == "thm35") {
    s = bme_verify_thm35(RangeOf(o.x_range == "3:7" ? "4:7" : o.x_range),
                         RangeOf(o.yc_range),
                         RangeOf(o.t_range.empty() ? "1:3" : o.t_range),
                         format, &out, &passed);
  } else {
    s = bme_verify_thm36(RangeOf(o.n_range.empty() ? "6:10" : o.n_range),
                         o.coefficient_n_max, o.workers, format, &out, &passed);
  }
  if (s != BME_OK) return Fail(s);
  Emit(out);
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching sequences, matching polynomials and matching energy "
               "of simple graphs, with bicyclic extremal-graph verification."};
  app.require_subcommand(1);
  Options o;

  auto* me = app.add_subcommand("me", "Matching energy of graph6 inputs");
  me->add_option("graph6", o.graphs, "graph6 strings (default: stdin lines)");
  me->add_option("--method", o.method,
                 "roots (exact isolation, default tolerance 1e-10), coulson "
                 "(quadrature, default tolerance 1e-6) or both")
      ->check(CLI::IsMember({"roots", "coulson", "both"}));
  me->add_option("--tolerance", o.tolerance,
                 "Error tolerance; 0 selects the method default")
      ->check(CLI::NonNegativeNumber);
  me->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* mpoly = app.add_subcommand("mpoly", "Matching sequence and polynomial");
  mpoly->add_option("graph6", o.graphs, "graph6 strings (default: stdin lines)");
  mpoly->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* family = app.add_subcommand("family", "Build a named graph family");
  family->add_option("kind", o.kind, "Family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "cvc", "theta", "t_tree",
                             "B_nab_t", "Bp_nab_t", "B_nxyc_t", "Bp_nxyc_t"}));
  family->add_option("--n", o.n, "Order (path, cycle, star)");
  family->add_option("--a", o.a, "First cycle length");
  family->add_option("--b", o.b, "Second cycle length");
  family->add_option("--x", o.x, "Theta path order x");
  family->add_option("--y", o.y, "Theta path order y");
  family->add_option("--c", o.c, "Theta path order c");
  family->add_option("--t", o.t, "Pendant count");
  family->add_option("--attach-pos", o.attach_pos,
                     "Pendant host vertex for the primed families");
  family->add_option("--format", o.format, "text (graph6), json or csv")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* enumerate =
      app.add_subcommand("enumerate", "All bicyclic graphs of order n");
  enumerate->add_option("--n", o.n, "Order (4..12)")->required();
  enumerate->add_flag("--classify", o.classify, "Append the cycle structure");
  enumerate->add_option("--format", o.format, "text (graph6 lines), json or csv")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* rank = app.add_subcommand("rank", "Rank bicyclic graphs by energy");
  rank->add_option("--n", o.n, "Order (6..10)")->required();
  rank->add_option("--workers", o.workers, "Threads")->check(CLI::PositiveNumber);
  rank->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand(
      "verify", "Check the ordering lemmas and theorems; exit 1 on failure");
  verify->add_option("target", o.target)
      ->required()
      ->check(CLI::IsMember(
          {"lemma31", "lemma32", "lemma33", "thm34", "thm35", "thm36"}));
  verify->add_option("--n", o.n_range,
                     "Order range N or LO:HI (lemma33 5:10, thm36 6:10)");
  verify->add_option("--a", o.a_range, "Range of a (lemma31 3:7, thm34 4:7)");
  verify->add_option("--b", o.b_range, "Range of b (3:7)");
  verify->add_option("--t", o.t_range, "Range of t (lemma31 1:4, else 1:3)");
  verify->add_option("--x", o.x_range, "Range of x (lemma32 3:7, thm35 4:7)");
  verify->add_option("--yc", o.yc_range, "Range of y and c (2:7)");
  verify->add_option("--coefficient-n-max", o.coefficient_n_max,
                     "thm36: check coefficient identities for n in 6..this");
  verify->add_option("--workers", o.workers, "Threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*me) {
      const bme_method method = Method(o.method);
      return ForEachGraph(o, bme_me_csv_header(),
                          [&](bme_graph* g, bme_format f, char** out) {
                            return bme_me(g, method, o.tolerance, f, out);
                          });
    }
    if (*mpoly) {
      return ForEachGraph(o, bme_mpoly_csv_header(),
                          [](bme_graph* g, bme_format f, char** out) {
                            return bme_mpoly(g, f, out);
                          });
    }
    if (*family) return RunFamily(o);
    if (*enumerate) {
      char* out = nullptr;
      const bme_status s = bme_enumerate(
          o.n, o.classify, Format(o.format, BME_FORMAT_TEXT), &out);
      if (s != BME_OK) return Fail(s);
      Emit(out);
      return kExitOk;
    }
    if (*rank) {
      char* out = nullptr;
      const bme_status s =
          bme_rank(o.n, o.workers, Format(o.format, BME_FORMAT_JSON), &out);
      if (s != BME_OK) return Fail(s);
      Emit(out);
      return kExitOk;
    }
    return RunVerify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bme: " << e.what() << "\n";
    return kExitUsage;
  }
}
