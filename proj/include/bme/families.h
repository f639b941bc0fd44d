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

#ifndef BME_FAMILIES_H_
#define BME_FAMILIES_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bme/graph.h"

namespace bme {

enum class FamilyKind {
  kPath,
  kCycle,
  kStar,
  kCvC,      // C_a v C_b: two cycles sharing one vertex
  kTheta,    // B_{x,y,c}: three internally disjoint paths between two hubs
  kTTree,    // T(x,y,c): spider with legs of x-1, y-1, c-1 vertices
  kBnab,     // B_{n,a,b}^{(t)}: t pendants on the shared vertex of C_a v C_b
  kBpnab,    // B'_{n,a,b}^{(t)}: t pendants on another vertex
  kBnxyc,    // B_{n,x,y,c}^{(t)}: t pendants on a hub of B_{x,y,c}
  kBpnxyc,   // B'_{n,x,y,c}^{(t)}: t pendants on a non-hub vertex
};

// Parameters of one named construction. `params` holds (n) for path, cycle
// and star, (a,b) for the two-cycle families and (x,y,c) for theta graphs and
// spiders. `attach_pos` is only read by the primed families.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::array<int, 3> params = {1, 0, 0};
  int t = 0;
  int attach_pos = -1;

  bool operator==(const FamilySpec&) const = default;
};

// Vertex layout (all constructors):
//   path(n)      0-1-...-(n-1); hubs = {0, n-1}
//   star(n)      center 0; hubs = {0}
//   cvc(a,b)     hub 0, C_a = 0,1,..,a-1 and C_b = 0,a,..,a+b-2; hubs = {0}
//   theta(x,y,c) hubs 0 and 1; interior of P_x is 2..x-1 walking from hub 0
//                to hub 1, then the interiors of P_y and P_c likewise
//   t_tree       center 0, then the legs in order
// Pendants of the B families take the indices after the base graph.
struct FamilyGraph {
  Graph graph;
  std::vector<Vertex> hubs;
};

FamilyGraph Path(int n);
FamilyGraph Cycle(int n);
FamilyGraph Star(int n);
FamilyGraph CvC(int a, int b);
FamilyGraph Theta(int x, int y, int c);
FamilyGraph TTree(int x, int y, int c);
FamilyGraph Build(const FamilySpec& spec);

// Number of vertices Build(spec) produces (validates the spec).
int FamilyOrder(const FamilySpec& spec);

FamilySpec MakeBnab(int a, int b, int t);
FamilySpec MakeBpnab(int a, int b, int t, int attach_pos);
FamilySpec MakeBnxyc(int x, int y, int c, int t);
FamilySpec MakeBpnxyc(int x, int y, int c, int t, int attach_pos);

// Index of the interior vertex of P_x in theta(x,y,c) at distance `a` from
// hub 1 (1 <= a <= x-2).
Vertex ThetaPathXVertex(int x, int a);

// Non-hub positions of the base graph that are pairwise inequivalent under
// the base graph's automorphisms.
std::vector<int> InequivalentAttachPositions(const FamilySpec& spec);

std::string_view FamilyKindName(FamilyKind kind);
// Accepts the names returned by FamilyKindName; throws ArgumentError.
FamilyKind ParseFamilyKind(std::string_view name);
// Human-readable label, e.g. "B_{6,3,3,2}^{(2)}" or "B'_{8,4,3}^{(2)}@1".
std::string FamilyLabel(const FamilySpec& spec);

}  // namespace bme

#endif  // BME_FAMILIES_H_
