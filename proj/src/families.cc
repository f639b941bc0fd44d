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

#include "bme/families.h"

#include <algorithm>
#include <map>
#include <string>

#include "bme/error.h"

namespace bme {

namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

void CheckTheta(int x, int y, int c) {
  Require(x >= 2 && y >= 2 && c >= 2, "theta paths need order >= 2");
  const int twos = (x == 2) + (y == 2) + (c == 2);
  if (twos > 1) {
    throw StructuralError("theta graph with two paths of order 2 has a "
                          "repeated edge");
  }
}

void AddPath(std::vector<Edge>& edges, Vertex from, Vertex to, int interior,
             int& next) {
  Vertex prev = from;
  for (int i = 0; i < interior; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  edges.emplace_back(prev, to);
}

FamilyGraph WithPendants(FamilyGraph base, Vertex host, int t) {
  Require(t >= 0, "t must be non-negative");
  std::vector<Edge> edges = base.graph.edges();
  const int n = base.graph.order();
  for (int i = 0; i < t; ++i) edges.emplace_back(host, n + i);
  base.graph = Graph::FromEdges(n + t, edges);
  return base;
}

bool IsHub(const FamilyGraph& base, Vertex v) {
  return std::find(base.hubs.begin(), base.hubs.end(), v) != base.hubs.end();
}

FamilyGraph Base(const FamilySpec& spec) {
  const auto [p0, p1, p2] = spec.params;
  switch (spec.kind) {
    case FamilyKind::kBnab:
    case FamilyKind::kBpnab:
      return CvC(p0, p1);
    case FamilyKind::kBnxyc:
    case FamilyKind::kBpnxyc:
      return Theta(p0, p1, p2);
    default:
      throw ArgumentError("not a pendant family");
  }
}

const std::map<FamilyKind, std::string_view>& KindNames() {
  static const std::map<FamilyKind, std::string_view> names = {
      {FamilyKind::kPath, "path"},       {FamilyKind::kCycle, "cycle"},
      {FamilyKind::kStar, "star"},       {FamilyKind::kCvC, "cvc"},
      {FamilyKind::kTheta, "theta"},     {FamilyKind::kTTree, "t_tree"},
      {FamilyKind::kBnab, "B_nab_t"},    {FamilyKind::kBpnab, "Bp_nab_t"},
      {FamilyKind::kBnxyc, "B_nxyc_t"},  {FamilyKind::kBpnxyc, "Bp_nxyc_t"},
  };
  return names;
}

}  // namespace

FamilyGraph Path(int n) {
  Require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return {Graph::FromEdges(n, edges), {0, n - 1}};
}

FamilyGraph Cycle(int n) {
  Require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return {Graph::FromEdges(n, edges), {}};
}

FamilyGraph Star(int n) {
  Require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return {Graph::FromEdges(n, edges), {0}};
}

FamilyGraph CvC(int a, int b) {
  Require(a >= 3 && b >= 3, "C_a v C_b needs a, b >= 3");
  std::vector<Edge> edges;
  int next = 1;
  AddPath(edges, 0, 0, a - 1, next);
  AddPath(edges, 0, 0, b - 1, next);
  return {Graph::FromEdges(a + b - 1, edges), {0}};
}

FamilyGraph Theta(int x, int y, int c) {
  CheckTheta(x, y, c);
  std::vector<Edge> edges;
  int next = 2;
  for (int len : {x, y, c}) AddPath(edges, 0, 1, len - 2, next);
  return {Graph::FromEdges(x + y + c - 4, edges), {0, 1}};
}

FamilyGraph TTree(int x, int y, int c) {
  Require(x >= 1 && y >= 1 && c >= 1, "T(x,y,c) needs x, y, c >= 1");
  std::vector<Edge> edges;
  int next = 1;
  for (int len : {x, y, c}) {
    Vertex prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return {Graph::FromEdges(x + y + c - 2, edges), {0}};
}

int FamilyOrder(const FamilySpec& spec) {
  const auto [p0, p1, p2] = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
    case FamilyKind::kStar:
      return Build(spec).graph.order();
    case FamilyKind::kCvC:
      return p0 + p1 - 1;
    case FamilyKind::kTheta:
      return p0 + p1 + p2 - 4;
    case FamilyKind::kTTree:
      return p0 + p1 + p2 - 2;
    case FamilyKind::kBnab:
    case FamilyKind::kBpnab:
      return p0 + p1 - 1 + spec.t;
    case FamilyKind::kBnxyc:
    case FamilyKind::kBpnxyc:
      return p0 + p1 + p2 - 4 + spec.t;
  }
  throw ArgumentError("unknown family kind");
}

FamilyGraph Build(const FamilySpec& spec) {
  const auto [p0, p1, p2] = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
      return Path(p0);
    case FamilyKind::kCycle:
      return Cycle(p0);
    case FamilyKind::kStar:
      return Star(p0);
    case FamilyKind::kCvC:
      return CvC(p0, p1);
    case FamilyKind::kTheta:
      return Theta(p0, p1, p2);
    case FamilyKind::kTTree:
      return TTree(p0, p1, p2);
    case FamilyKind::kBnab:
    case FamilyKind::kBnxyc: {
      FamilyGraph base = Base(spec);
      return WithPendants(std::move(base), 0, spec.t);
    }
    case FamilyKind::kBpnab:
    case FamilyKind::kBpnxyc: {
      FamilyGraph base = Base(spec);
      if (!base.graph.valid_vertex(spec.attach_pos) ||
          IsHub(base, spec.attach_pos)) {
        throw ArgumentError("attach_pos " + std::to_string(spec.attach_pos) +
                            " is not a non-hub vertex of the base graph");
      }
      return WithPendants(std::move(base), spec.attach_pos, spec.t);
    }
  }
  throw ArgumentError("unknown family kind");
}

FamilySpec MakeBnab(int a, int b, int t) {
  return {FamilyKind::kBnab, {a, b, 0}, t, -1};
}

FamilySpec MakeBpnab(int a, int b, int t, int attach_pos) {
  return {FamilyKind::kBpnab, {a, b, 0}, t, attach_pos};
}

FamilySpec MakeBnxyc(int x, int y, int c, int t) {
  return {FamilyKind::kBnxyc, {x, y, c}, t, -1};
}

FamilySpec MakeBpnxyc(int x, int y, int c, int t, int attach_pos) {
  return {FamilyKind::kBpnxyc, {x, y, c}, t, attach_pos};
}

Vertex ThetaPathXVertex(int x, int a) {
  Require(a >= 1 && a <= x - 2, "position must satisfy 1 <= a <= x-2");
  return x - a;
}

std::vector<int> InequivalentAttachPositions(const FamilySpec& spec) {
  const FamilyGraph base = Base(spec);
  std::vector<int> out;
  std::vector<CanonicalForm> seen;
  for (Vertex v = 0; v < base.graph.order(); ++v) {
    if (IsHub(base, v)) continue;
    // Pendant-decorated copies are isomorphic exactly when v is in the same
    // orbit as an earlier choice (hubs stay distinguishable by the marker).
    Graph marked = AddPendant(base.graph, v);
    for (Vertex hub : base.hubs) {
      marked = AddPendant(AddPendant(AddPendant(marked, hub), hub), hub);
    }
    CanonicalForm key = ComputeCanonicalForm(marked);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      out.push_back(v);
    }
  }
  return out;
}

std::string_view FamilyKindName(FamilyKind kind) { return KindNames().at(kind); }

FamilyKind ParseFamilyKind(std::string_view name) {
  for (const auto& [kind, label] : KindNames()) {
    if (label == name) return kind;
  }
  throw ArgumentError("unknown family '" + std::string(name) + "'");
}

std::string FamilyLabel(const FamilySpec& spec) {
  const auto [p0, p1, p2] = spec.params;
  const std::string n = std::to_string(FamilyOrder(spec));
  auto num = [](int v) { return std::to_string(v); };
  switch (spec.kind) {
    case FamilyKind::kPath:
      return "P_" + num(p0);
    case FamilyKind::kCycle:
      return "C_" + num(p0);
    case FamilyKind::kStar:
      return "S_" + num(p0);
    case FamilyKind::kCvC:
      return "C_" + num(p0) + "vC_" + num(p1);
    case FamilyKind::kTheta:
      return "B_{" + num(p0) + "," + num(p1) + "," + num(p2) + "}";
    case FamilyKind::kTTree:
      return "T(" + num(p0) + "," + num(p1) + "," + num(p2) + ")";
    case FamilyKind::kBnab:
      return "B_{" + n + "," + num(p0) + "," + num(p1) + "}^{(" +
             num(spec.t) + ")}";
    case FamilyKind::kBpnab:
      return "B'_{" + n + "," + num(p0) + "," + num(p1) + "}^{(" +
             num(spec.t) + ")}@" + num(spec.attach_pos);
    case FamilyKind::kBnxyc:
      return "B_{" + n + "," + num(p0) + "," + num(p1) + "," + num(p2) +
             "}^{(" + num(spec.t) + ")}";
    case FamilyKind::kBpnxyc:
      return "B'_{" + n + "," + num(p0) + "," + num(p1) + "," + num(p2) +
             "}^{(" + num(spec.t) + ")}@" + num(spec.attach_pos);
  }
  return "?";
}

}  // namespace bme
