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

#include "bme/energy.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bme/error.h"
#include "bme/int_poly.h"

namespace bme {

namespace {

constexpr double kBracketWidth = 1e-14;

std::vector<double> ToDoubles(const MatchSequence& s) {
  std::vector<double> out;
  for (const auto& c : s.counts()) out.push_back(static_cast<double>(c));
  return out;
}

struct RootsWithBounds {
  RootSet roots;
  double energy = 0;
  double error_bound = 0;
};

RootsWithBounds ComputeRoots(const MatchSequence& sequence) {
  const MatchingPolynomial alpha(sequence);
  const poly::IntPoly q = poly::Trim(alpha.EvenReduction());
  RootsWithBounds out;
  out.roots.zero_multiplicity = sequence.order() - 2 * sequence.max_matching();
  for (const auto& bracket : poly::IsolateRealRoots(q, kBracketWidth)) {
    const double lo = bracket.lo.ToDouble();
    const double hi = bracket.hi.ToDouble();
    if (hi <= 0) {
      throw NumericError("matching polynomial reduction has a non-positive root",
                         0.0);
    }
    const double lo_root = std::sqrt(std::max(lo, 0.0));
    const double hi_root = std::sqrt(hi);
    const double root = std::sqrt(0.5 * (std::max(lo, 0.0) + hi));
    for (int i = 0; i < bracket.multiplicity; ++i) {
      out.roots.positive_roots.push_back(root);
    }
    out.energy += 2.0 * bracket.multiplicity * root;
    out.error_bound += 2.0 * bracket.multiplicity *
                       ((hi_root - lo_root) + 4 * std::numeric_limits<double>::epsilon() * root);
  }
  return out;
}

}  // namespace

std::string_view EnergyMethodName(EnergyMethod method) {
  switch (method) {
    case EnergyMethod::kRoots:
      return "roots";
    case EnergyMethod::kCoulson:
      return "coulson";
    case EnergyMethod::kClosedForm:
      return "closed_form";
  }
  return "?";
}

RootSet MatchingRoots(const MatchSequence& sequence) {
  return ComputeRoots(sequence).roots;
}

EnergyResult MatchingEnergyRoots(const MatchSequence& sequence,
                                 double tolerance) {
  if (!(tolerance > 0)) throw ArgumentError("tolerance must be positive");
  const RootsWithBounds r = ComputeRoots(sequence);
  if (r.error_bound > tolerance) {
    throw NumericError("root brackets too wide for the requested tolerance",
                       r.energy);
  }
  return {r.energy, EnergyMethod::kRoots, r.error_bound};
}

EnergyResult MatchingEnergyRoots(const Graph& g, double tolerance) {
  return MatchingEnergyRoots(ComputeMatchSequence(g), tolerance);
}

EnergyResult MatchingEnergyCoulson(const MatchSequence& sequence,
                                   double tolerance) {
  if (!(tolerance > 0)) throw ArgumentError("tolerance must be positive");
  const std::vector<double> m = ToDoubles(sequence);
  const int top = sequence.max_matching();
  if (top == 0) return {0.0, EnergyMethod::kCoulson, 0.0};

  // [0,1]: x^-2 log1p(Σ_{k>=1} m_k x^2k), limit m_1 at x = 0.
  auto head = [&](double x) {
    if (x == 0) return m[1];
    const double x2 = x * x;
    double tail = 0;
    for (int k = top; k >= 1; --k) tail = (tail + m[k]) * x2;
    return std::log1p(tail) / x2;
  };
  // [1,∞) after x = 1/u: ∫_0^1 ln Σ_k m_k u^(2(K-k)) du + 2K.
  auto tail = [&](double u) {
    const double u2 = u * u;
    double acc = 0;
    for (int k = 0; k <= top; ++k) acc = acc * u2 + m[k];
    return std::log(acc);
  };

  using Integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
  constexpr unsigned kMaxDepth = 30;
  const double piece_tolerance = tolerance * std::numbers::pi / 8;
  double head_error = 0;
  double tail_error = 0;
  const double head_value =
      Integrator::integrate(head, 0.0, 1.0, kMaxDepth, 1e-13, &head_error);
  const double tail_value =
      Integrator::integrate(tail, 0.0, 1.0, kMaxDepth, 1e-13, &tail_error);
  const double scale = 2.0 / std::numbers::pi;
  const double value = scale * (head_value + tail_value + 2.0 * top);
  const double error = scale * (head_error + tail_error);
  if (!(head_error <= piece_tolerance) || !(tail_error <= piece_tolerance)) {
    throw NumericError("Coulson quadrature did not converge", value);
  }
  return {value, EnergyMethod::kCoulson, error};
}

EnergyResult MatchingEnergyCoulson(const Graph& g, double tolerance) {
  return MatchingEnergyCoulson(ComputeMatchSequence(g), tolerance);
}

double ClosedFormEnergy(ClosedFormFamily family, int n) {
  if (n < 5) throw ArgumentError("closed forms need n >= 5");
  const double nn = n;
  switch (family) {
    case ClosedFormFamily::kBn333: {
      const double disc = std::sqrt((nn + 1) * (nn + 1) - 4 * (3 * nn - 9));
      return 2 * std::sqrt((nn + 1 + disc) / 2) +
             2 * std::sqrt(std::max((nn + 1 - disc) / 2, 0.0));
    }
    case ClosedFormFamily::kBn33: {
      const double disc = std::sqrt(nn * nn - 4 * (nn - 5));
      return 2 + 2 * std::sqrt((nn + disc) / 2) +
             2 * std::sqrt(std::max((nn - disc) / 2, 0.0));
    }
  }
  throw ArgumentError("unknown closed-form family");
}

int MatchingPolynomialRealRootCount(const MatchSequence& sequence) {
  return poly::RealRootCount(
      poly::Trim(MatchingPolynomial(sequence).coefficients()));
}

}  // namespace bme
