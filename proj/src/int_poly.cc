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

#include "bme/int_poly.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

namespace bme::poly {

namespace {

BigInt Shifted(const BigInt& v, int bits) { return bits == 0 ? v : BigInt(v << bits); }

long double EvalLong(const IntPoly& p, long double x) {
  long double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + static_cast<long double>(*it);
  }
  return acc;
}

int Sign(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Dyadic Subtract(const Dyadic& a, const Dyadic& b) {
  return Add(a, Dyadic{-b.num, b.exp});
}

double Width(const Dyadic& lo, const Dyadic& hi) {
  return Subtract(hi, lo).ToDouble();
}

}  // namespace

Dyadic Dyadic::FromDouble(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite dyadic");
  if (v == 0) return {0, 0};
  int e = 0;
  const double m = std::frexp(v, &e);
  const auto mantissa = static_cast<long long>(std::ldexp(m, 53));
  const int shift = e - 53;
  if (shift >= 0) return {BigInt(mantissa) << shift, 0};
  return {BigInt(mantissa), -shift};
}

double Dyadic::ToDouble() const {
  if (num == 0) return 0.0;
  BigInt n = num;
  int e = exp;
  const unsigned bits = boost::multiprecision::msb(abs(n));
  if (bits > 60) {
    const int drop = static_cast<int>(bits) - 60;
    n >>= drop;  // truncation below double precision
    e -= drop;
  }
  return std::ldexp(static_cast<double>(n), -e);
}

Dyadic Add(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp, b.exp);
  return {Shifted(a.num, e - a.exp) + Shifted(b.num, e - b.exp), e};
}

Dyadic Midpoint(const Dyadic& a, const Dyadic& b) {
  Dyadic sum = Add(a, b);
  sum.exp += 1;
  return sum;
}

int Compare(const Dyadic& a, const Dyadic& b) {
  const int e = std::max(a.exp, b.exp);
  const BigInt lhs = Shifted(a.num, e - a.exp);
  const BigInt rhs = Shifted(b.num, e - b.exp);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

IntPoly Trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int Degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

IntPoly Derivative(const IntPoly& p) {
  IntPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * i);
  return Trim(std::move(out));
}

BigInt Content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::integer::gcd(g, abs(c));
  return g;
}

IntPoly PrimitivePart(const IntPoly& p) {
  const BigInt g = Content(p);
  if (g == 0 || g == 1) return p;
  IntPoly out(p);
  for (auto& c : out) c /= g;
  return out;
}

IntPoly PseudoRemainder(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by zero");
  IntPoly r = Trim(a);
  const int db = Degree(b);
  const BigInt& lead = b.back();
  int steps = std::max(Degree(r) - db + 1, 0);
  while (Degree(r) >= db) {
    const int shift = Degree(r) - db;
    const BigInt factor = r.back();
    for (auto& c : r) c *= lead;
    for (int i = 0; i <= db; ++i) r[i + shift] -= factor * b[i];
    r = Trim(std::move(r));
    --steps;
  }
  // Top up to the fixed power lc(b)^(deg a - deg b + 1).
  for (; steps > 0; --steps) {
    for (auto& c : r) c *= lead;
  }
  return r;
}

IntPoly Gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = PrimitivePart(Trim(a));
  IntPoly y = PrimitivePart(Trim(b));
  if (Degree(x) < Degree(y)) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = PseudoRemainder(x, y);
    x = std::move(y);
    y = PrimitivePart(std::move(r));
  }
  if (!x.empty() && x.back() < 0) {
    for (auto& c : x) c = -c;
  }
  return x;
}

IntPoly ExactDivide(const IntPoly& a, const IntPoly& b) {
  IntPoly r = Trim(a);
  const IntPoly d = Trim(b);
  if (d.empty()) throw std::domain_error("division by zero polynomial");
  if (Degree(r) < Degree(d)) {
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return {};
  }
  IntPoly q(Degree(r) - Degree(d) + 1);
  while (!r.empty() && Degree(r) >= Degree(d)) {
    const int shift = Degree(r) - Degree(d);
    BigInt rem;
    BigInt coef;
    boost::multiprecision::divide_qr(r.back(), d.back(), coef, rem);
    if (rem != 0) throw std::logic_error("inexact polynomial division");
    q[shift] = coef;
    for (int i = 0; i <= Degree(d); ++i) r[i + shift] -= coef * d[i];
    r = Trim(std::move(r));
  }
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return Trim(std::move(q));
}

std::vector<std::pair<IntPoly, int>> SquareFreeDecomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  const IntPoly f = PrimitivePart(Trim(p));
  if (Degree(f) <= 0) return out;
  const IntPoly df = Derivative(f);
  const IntPoly a0 = Gcd(f, df);
  IntPoly b = ExactDivide(f, a0);
  IntPoly c = ExactDivide(df, a0);
  auto subtract = [](IntPoly lhs, const IntPoly& rhs) {
    if (lhs.size() < rhs.size()) lhs.resize(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) lhs[i] -= rhs[i];
    return Trim(std::move(lhs));
  };
  IntPoly d = subtract(c, Derivative(b));
  for (int i = 1; Degree(b) > 0; ++i) {
    const IntPoly a = Gcd(b, d);
    b = ExactDivide(b, a);
    c = ExactDivide(d, a);
    d = subtract(c, Derivative(b));
    if (Degree(a) > 0) out.emplace_back(a, i);
  }
  return out;
}

int SignAt(const IntPoly& p, const Dyadic& x) {
  if (p.empty()) return 0;
  // Homogenized Horner: Σ c_i num^i D^(d-i) with D = 2^exp > 0.
  BigInt acc = p.back();
  BigInt scale = 1;
  const BigInt denominator = BigInt(1) << x.exp;
  for (int i = Degree(p) - 1; i >= 0; --i) {
    scale *= denominator;
    acc = acc * x.num + p[i] * scale;
  }
  return Sign(acc);
}

SturmSequence::SturmSequence(const IntPoly& p) {
  IntPoly a = Trim(p);
  if (a.empty()) return;
  chain_.push_back(a);
  IntPoly b = PrimitivePart(Derivative(a));
  while (!b.empty()) {
    chain_.push_back(b);
    const int delta = Degree(a) - Degree(b) + 1;
    IntPoly r = PseudoRemainder(a, b);
    // prem scales by lc(b)^delta; undo a negative scale so r is a positive
    // multiple of the true remainder, then negate.
    const bool flip = b.back() < 0 && delta % 2 == 1;
    r = PrimitivePart(std::move(r));
    if (!flip) {
      for (auto& c : r) c = -c;
    }
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmSequence::Variations(const Dyadic& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    const int sign = SignAt(s, x);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

int SturmSequence::VariationsAtInfinity(bool positive) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    int sign = Sign(s.back());
    if (!positive && Degree(s) % 2 == 1) sign = -sign;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

int SturmSequence::CountRoots(const Dyadic& a, const Dyadic& b) const {
  return Variations(a) - Variations(b);
}

int SturmSequence::CountAllRoots() const {
  if (chain_.empty()) return 0;
  return VariationsAtInfinity(false) - VariationsAtInfinity(true);
}

int RealRootCount(const IntPoly& p) {
  int total = 0;
  for (const auto& [factor, multiplicity] : SquareFreeDecomposition(p)) {
    total += multiplicity * SturmSequence(factor).CountAllRoots();
  }
  return total;
}

namespace {

// Squeezes a bracket around a simple root with exact sign tests. Newton
// iterates (long double) are used as split points when they land inside the
// bracket; each round also probes the midpoint if the bracket did not halve.
void Refine(const IntPoly& f, RootBracket& bracket, double width) {
  const IntPoly df = Derivative(f);
  const int sign_lo = SignAt(f, bracket.lo);
  long double estimate = Midpoint(bracket.lo, bracket.hi).ToDouble();
  const Dyadic quarter = Dyadic::FromDouble(width / 4);
  auto probe = [&](const Dyadic& x) {
    if (Compare(x, bracket.lo) <= 0 || Compare(x, bracket.hi) >= 0) return;
    const int s = SignAt(f, x);
    if (s == 0) {
      bracket.lo = bracket.hi = x;
    } else if (s == sign_lo) {
      bracket.lo = x;
    } else {
      bracket.hi = x;
    }
  };
  for (int iter = 0; iter < 2000 && Width(bracket.lo, bracket.hi) > width;
       ++iter) {
    const double before = Width(bracket.lo, bracket.hi);
    const long double slope = EvalLong(df, estimate);
    if (slope != 0) {
      const long double next = estimate - EvalLong(f, estimate) / slope;
      if (std::isfinite(static_cast<double>(next))) {
        const Dyadic x = Dyadic::FromDouble(static_cast<double>(next));
        probe(x);
        probe(Add(x, quarter));
        probe(Subtract(x, quarter));
        estimate = next;
      }
    }
    if (Width(bracket.lo, bracket.hi) > before / 2) {
      probe(Midpoint(bracket.lo, bracket.hi));
      estimate = Midpoint(bracket.lo, bracket.hi).ToDouble();
    }
  }
}

void Isolate(const IntPoly& f, const SturmSequence& sturm, Dyadic lo,
             Dyadic hi, int count, std::vector<RootBracket>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({std::move(lo), std::move(hi), 1});
    return;
  }
  Dyadic mid = Midpoint(lo, hi);
  if (SignAt(f, mid) == 0) {
    // Split elsewhere so endpoints stay off the roots.
    Dyadic offset = Subtract(hi, lo);
    offset.exp += 2;
    for (int tries = 0; SignAt(f, mid) == 0 && tries < 64; ++tries) {
      mid = Add(mid, offset);
      offset.exp += 1;
    }
  }
  const int left = sturm.CountRoots(lo, mid);
  Isolate(f, sturm, lo, mid, left, out);
  Isolate(f, sturm, mid, hi, count - left, out);
}

}  // namespace

std::vector<RootBracket> IsolateRealRoots(const IntPoly& p, double width) {
  std::vector<RootBracket> out;
  for (const auto& [factor, multiplicity] : SquareFreeDecomposition(p)) {
    // Cauchy bound: every root lies in (-bound, bound).
    BigInt max_coef = 0;
    for (int i = 0; i < Degree(factor); ++i) {
      max_coef = std::max(max_coef, BigInt(abs(factor[i])));
    }
    const BigInt lead = abs(factor.back());
    const BigInt bound = (max_coef + lead - 1) / lead + 2;
    const SturmSequence sturm(factor);
    std::vector<RootBracket> roots;
    const Dyadic lo = Dyadic::FromInt(-bound);
    const Dyadic hi = Dyadic::FromInt(bound);
    Isolate(factor, sturm, lo, hi, sturm.CountRoots(lo, hi), roots);
    for (auto& bracket : roots) {
      Refine(factor, bracket, width);
      bracket.multiplicity = multiplicity;
      out.push_back(std::move(bracket));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return Compare(a.lo, b.lo) < 0;
  });
  return out;
}

}  // namespace bme::poly
