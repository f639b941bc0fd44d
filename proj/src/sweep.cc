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

#include "bme/sweep.h"

#include <charconv>

#include "bme/error.h"

namespace bme {

namespace {

int ParseInt(std::string_view text, const std::string& whole) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ArgumentError("bad range '" + whole + "', expected N or LO:HI");
  }
  return value;
}

}  // namespace

IntRange ParseIntRange(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = ParseInt(text, text);
    return {v, v};
  }
  const std::string_view view(text);
  IntRange r{ParseInt(view.substr(0, colon), text),
             ParseInt(view.substr(colon + 1), text)};
  if (r.empty()) throw ArgumentError("empty range '" + text + "'");
  return r;
}

std::vector<Lemma31Report> SweepLemma31(IntRange a, IntRange b, IntRange t) {
  std::vector<Lemma31Report> out;
  for (int aa = a.lo; aa <= a.hi; ++aa) {
    for (int bb = b.lo; bb <= b.hi; ++bb) {
      for (int tt = t.lo; tt <= t.hi; ++tt) {
        for (int pos = 1; pos <= aa + bb - 2; ++pos) {
          out.push_back(VerifyLemma31(aa, bb, tt, pos));
        }
      }
    }
  }
  return out;
}

std::vector<Lemma32Report> SweepLemma32(IntRange x, IntRange yc, IntRange t) {
  std::vector<Lemma32Report> out;
  for (int xx = std::max(x.lo, 3); xx <= x.hi; ++xx) {
    for (int y = std::max(yc.lo, 2); y <= yc.hi; ++y) {
      for (int c = std::max(yc.lo, 2); c <= yc.hi; ++c) {
        if (y == 2 && c == 2) continue;
        for (int tt = t.lo; tt <= t.hi; ++tt) {
          for (int pos = 1; pos <= xx - 2; ++pos) {
            out.push_back(VerifyLemma32(xx, y, c, tt, pos));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Lemma33Report> SweepLemma33(IntRange n) {
  std::vector<Lemma33Report> out;
  for (int nn = n.lo; nn <= n.hi; ++nn) out.push_back(VerifyLemma33(nn));
  return out;
}

std::vector<StrictDecreaseReport> SweepTheorem34(IntRange a, IntRange b,
                                                 IntRange t) {
  std::vector<StrictDecreaseReport> out;
  for (int aa = std::max(a.lo, 4); aa <= a.hi; ++aa) {
    for (int bb = std::max(b.lo, 3); bb <= b.hi; ++bb) {
      for (int tt = std::max(t.lo, 1); tt <= t.hi; ++tt) {
        out.push_back(VerifyTheorem34(aa, bb, tt));
      }
    }
  }
  return out;
}

std::vector<StrictDecreaseReport> SweepTheorem35(IntRange x, IntRange yc,
                                                 IntRange t) {
  std::vector<StrictDecreaseReport> out;
  for (int xx = std::max(x.lo, 4); xx <= x.hi; ++xx) {
    for (int y = std::max(yc.lo, 2); y <= yc.hi; ++y) {
      for (int c = std::max(yc.lo, 2); c <= yc.hi; ++c) {
        if (y * c < 6) continue;
        for (int tt = std::max(t.lo, 1); tt <= t.hi; ++tt) {
          out.push_back(VerifyTheorem35(xx, y, c, tt));
        }
      }
    }
  }
  return out;
}

}  // namespace bme
