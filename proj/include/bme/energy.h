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

#ifndef BME_ENERGY_H_
#define BME_ENERGY_H_

#include <string_view>
#include <vector>

#include "bme/graph.h"
#include "bme/matching.h"

namespace bme {

enum class EnergyMethod { kRoots, kCoulson, kClosedForm };

std::string_view EnergyMethodName(EnergyMethod method);

struct EnergyResult {
  double value = 0;
  EnergyMethod method = EnergyMethod::kRoots;
  double error_bound = 0;
};

// Roots of α(G,x): the positive ones (with multiplicity, ascending) and the
// multiplicity of zero. The negative roots mirror the positive ones.
struct RootSet {
  std::vector<double> positive_roots;
  int zero_multiplicity = 0;
};

inline constexpr double kRootTolerance = 1e-10;
inline constexpr double kCoulsonTolerance = 1e-6;

// Isolates the roots of q(y) = Σ_k (-1)^k m(G,k) y^(K-k) exactly (Sturm
// sequences over the integers, square-free split by Yun's algorithm), refines
// each bracket to width 1e-14, and maps y -> ±sqrt(y).
RootSet MatchingRoots(const MatchSequence& sequence);

// 2 Σ sqrt(y_i) over the roots of q; error_bound covers the bracket widths.
// Throws NumericError if that bound exceeds `tolerance`.
EnergyResult MatchingEnergyRoots(const MatchSequence& sequence,
                                 double tolerance = kRootTolerance);
EnergyResult MatchingEnergyRoots(const Graph& g,
                                 double tolerance = kRootTolerance);

// (2/π) ∫_0^∞ x^-2 ln Σ_k m(G,k) x^(2k) dx, split at x = 1 with x -> 1/u on
// the tail so both pieces are smooth on [0, 1]; adaptive Gauss-Kronrod (15
// points). Throws NumericError (with the partial estimate) if the estimated
// error stays above `tolerance`.
EnergyResult MatchingEnergyCoulson(const MatchSequence& sequence,
                                   double tolerance = kCoulsonTolerance);
EnergyResult MatchingEnergyCoulson(const Graph& g,
                                   double tolerance = kCoulsonTolerance);

// The two radical expressions for the bicyclic extremal families:
//   kBn333: B_{n,3,3,3}^{(n-5)},  kBn33: B_{n,3,3}^{(n-5)}.  Requires n >= 5.
enum class ClosedFormFamily { kBn333, kBn33 };
double ClosedFormEnergy(ClosedFormFamily family, int n);

// Number of real roots of α(G,x), with multiplicity, by Sturm counting on the
// square-free factors.
int MatchingPolynomialRealRootCount(const MatchSequence& sequence);

}  // namespace bme

#endif  // BME_ENERGY_H_
