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

#ifndef BME_INT_POLY_H_
#define BME_INT_POLY_H_

#include <utility>
#include <vector>

#include "bme/matching.h"

namespace bme::poly {

// Dense integer polynomial, index i = coefficient of x^i, no trailing zeros
// (the zero polynomial is empty).
using IntPoly = std::vector<BigInt>;

// Exact rational num / 2^exp.
struct Dyadic {
  BigInt num;
  int exp = 0;

  static Dyadic FromInt(const BigInt& v) { return {v, 0}; }
  // Exact conversion of a finite double.
  static Dyadic FromDouble(double v);
  double ToDouble() const;
};

Dyadic Midpoint(const Dyadic& a, const Dyadic& b);
Dyadic Add(const Dyadic& a, const Dyadic& b);
int Compare(const Dyadic& a, const Dyadic& b);

IntPoly Trim(IntPoly p);
int Degree(const IntPoly& p);  // -1 for the zero polynomial
IntPoly Derivative(const IntPoly& p);
BigInt Content(const IntPoly& p);
// Divides by the content; keeps the sign of the leading coefficient.
IntPoly PrimitivePart(const IntPoly& p);
// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly PseudoRemainder(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient.
IntPoly Gcd(const IntPoly& a, const IntPoly& b);
// a / b when b divides a over Q and the quotient is integral; throws
// std::logic_error otherwise.
IntPoly ExactDivide(const IntPoly& a, const IntPoly& b);

// Yun's algorithm: pairs (f_i, i) with p = c * Π f_i^i, each f_i square-free
// and primitive. Constant factors are dropped.
std::vector<std::pair<IntPoly, int>> SquareFreeDecomposition(const IntPoly& p);

// Exact sign of p at a dyadic point.
int SignAt(const IntPoly& p, const Dyadic& x);

class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p);
  // Number of distinct real roots in (a, b); a and b must not be roots.
  int CountRoots(const Dyadic& a, const Dyadic& b) const;
  int CountAllRoots() const;

 private:
  int Variations(const Dyadic& x) const;
  int VariationsAtInfinity(bool positive) const;
  std::vector<IntPoly> chain_;
};

// Real roots counted with multiplicity.
int RealRootCount(const IntPoly& p);

struct RootBracket {
  Dyadic lo;
  Dyadic hi;
  int multiplicity = 1;
};

// Brackets every real root of p with width <= width (exact dyadic endpoints,
// each bracket containing exactly one distinct root), sorted ascending.
std::vector<RootBracket> IsolateRealRoots(const IntPoly& p, double width);

}  // namespace bme::poly

#endif  // BME_INT_POLY_H_
