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

#ifndef BME_REPORT_H_
#define BME_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"

#include "bme/energy.h"
#include "bme/families.h"
#include "bme/matching.h"
#include "bme/order.h"
#include "bme/rank.h"

namespace bme {

// Bumped on any incompatible change to the JSON below.
inline constexpr char kReportSchema[] = "bme.report/1";

// Counts that fit in int64 are JSON numbers, larger ones decimal strings.
nlohmann::json BigIntJson(const BigInt& value);
nlohmann::json BigIntsJson(const std::vector<BigInt>& values);

nlohmann::json MpolyJson(const Graph& g);
nlohmann::json EnergyJson(const EnergyResult& result);
nlohmann::json FamilyJson(const FamilySpec& spec);
nlohmann::json EnumerateJson(int n, const std::vector<Graph>& graphs,
                             bool classify);

nlohmann::json ReportJson(const Lemma31Report& r);
nlohmann::json ReportJson(const Lemma32Report& r);
nlohmann::json ReportJson(const Lemma33Report& r);
nlohmann::json ReportJson(const StrictDecreaseReport& r);
nlohmann::json ReportJson(const RankReport& r);
nlohmann::json ReportJson(const Theorem36Report& r);

// {"schema", "target", "pass", "checks", "failures", "reports"}.
template <typename Report>
nlohmann::json VerifyJson(const std::string& target,
                          const std::vector<Report>& reports) {
  nlohmann::json out = {{"schema", kReportSchema}, {"target", target}};
  nlohmann::json items = nlohmann::json::array();
  int failures = 0;
  for (const Report& r : reports) {
    items.push_back(ReportJson(r));
    if (!r.pass()) ++failures;
  }
  out["pass"] = failures == 0;
  out["checks"] = reports.size();
  out["failures"] = failures;
  out["reports"] = std::move(items);
  return out;
}

// CSV renderings. Every table starts with a header row; sequences are
// space-separated inside one field.
std::string MpolyCsvHeader();
std::string MpolyCsvRow(const Graph& g);
std::string RankCsv(const RankReport& r);
std::string ReportCsvHeader(const Lemma31Report&);
std::string ReportCsvRow(const Lemma31Report& r);
std::string ReportCsvHeader(const Lemma32Report&);
std::string ReportCsvRow(const Lemma32Report& r);
std::string ReportCsvHeader(const Lemma33Report&);
std::string ReportCsvRow(const Lemma33Report& r);
std::string ReportCsvHeader(const StrictDecreaseReport&);
std::string ReportCsvRow(const StrictDecreaseReport& r);
std::string Theorem36Csv(const Theorem36Report& r);

template <typename Report>
std::string VerifyCsv(const std::vector<Report>& reports) {
  std::string out = ReportCsvHeader(Report{});
  for (const Report& r : reports) out += ReportCsvRow(r);
  return out;
}

// Shortest round-trip decimal.
std::string FormatDouble(double value);

}  // namespace bme

#endif  // BME_REPORT_H_
