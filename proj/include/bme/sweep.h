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

#ifndef BME_SWEEP_H_
#define BME_SWEEP_H_

#include <string>
#include <vector>

#include "bme/order.h"

namespace bme {

// Closed integer interval.
struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};

// "lo:hi" or a single integer.
IntRange ParseIntRange(const std::string& text);

// Every attach position on both cycles.
std::vector<Lemma31Report> SweepLemma31(IntRange a, IntRange b, IntRange t);

// Every theta (x, y, c) with x in `x`, y and c in `yc`, at most one path of
// order 2, and every interior vertex of P_x.
std::vector<Lemma32Report> SweepLemma32(IntRange x, IntRange yc, IntRange t);

std::vector<Lemma33Report> SweepLemma33(IntRange n);

// a in `a` (a >= 4), b in `b`.
std::vector<StrictDecreaseReport> SweepTheorem34(IntRange a, IntRange b,
                                                 IntRange t);

// x in `x` (x >= 4), y and c in `yc` with y*c >= 6.
std::vector<StrictDecreaseReport> SweepTheorem35(IntRange x, IntRange yc,
                                                 IntRange t);

template <typename Report>
bool AllPass(const std::vector<Report>& reports) {
  for (const Report& r : reports) {
    if (!r.pass()) return false;
  }
  return true;
}

}  // namespace bme

#endif  // BME_SWEEP_H_
