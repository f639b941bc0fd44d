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

#include "bme/bme.h"

#include <cmath>
#include <fstream>
#include <memory>
#include <string>
#include <thread>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct GraphDeleter {
  void operator()(bme_graph* g) const { bme_graph_free(g); }
};
using GraphPtr = std::unique_ptr<bme_graph, GraphDeleter>;

// Takes ownership of a returned string.
std::string Take(char* s) {
  std::string out = s;
  bme_string_free(s);
  return out;
}

GraphPtr FromGraph6(const char* text) {
  bme_graph* g = nullptr;
  EXPECT_EQ(bme_graph_from_graph6(text, &g), BME_OK) << bme_last_error();
  return GraphPtr(g);
}

TEST(CApiTest, Basics) {
  EXPECT_STRNE(bme_version(), "");
  EXPECT_STREQ(bme_status_name(BME_OK), "ok");
  EXPECT_STREQ(bme_status_name(BME_ERR_PARSE), "parse");
  GraphPtr g = FromGraph6(">>graph6<<D{c\n");
  EXPECT_EQ(bme_graph_order(g.get()), 5);
  EXPECT_EQ(bme_graph_edge_count(g.get()), 6);
  char* text = nullptr;
  ASSERT_EQ(bme_graph_to_graph6(g.get(), &text), BME_OK);
  EXPECT_EQ(Take(text), "D{c");
  char* counts = nullptr;
  ASSERT_EQ(bme_match_sequence(g.get(), &counts), BME_OK);
  EXPECT_EQ(Take(counts), "1 6 5");
  char* label = nullptr;
  ASSERT_EQ(bme_classify(g.get(), &label), BME_OK);
  EXPECT_EQ(Take(label), "two_cycles(3,3,l=-1)");
}

TEST(CApiTest, FromEdgesAndCanonical) {
  const int path[] = {3, 2, 2, 0, 0, 1};
  bme_graph* raw = nullptr;
  ASSERT_EQ(bme_graph_from_edges(4, path, 3, &raw), BME_OK);
  GraphPtr g(raw);
  bme_graph* canon = nullptr;
  ASSERT_EQ(bme_graph_canonical(g.get(), &canon), BME_OK);
  GraphPtr c(canon);
  const int other[] = {0, 1, 1, 2, 2, 3};
  ASSERT_EQ(bme_graph_from_edges(4, other, 3, &raw), BME_OK);
  GraphPtr h(raw);
  ASSERT_EQ(bme_graph_canonical(h.get(), &canon), BME_OK);
  GraphPtr hc(canon);
  char *a = nullptr, *b = nullptr;
  ASSERT_EQ(bme_graph_to_graph6(c.get(), &a), BME_OK);
  ASSERT_EQ(bme_graph_to_graph6(hc.get(), &b), BME_OK);
  EXPECT_EQ(Take(a), Take(b));
}

TEST(CApiTest, ErrorsLeaveOutputsAlone) {
  bme_graph* g = reinterpret_cast<bme_graph*>(0x1);
  EXPECT_EQ(bme_graph_from_graph6("D{", &g), BME_ERR_PARSE);
  EXPECT_EQ(g, reinterpret_cast<bme_graph*>(0x1));
  EXPECT_NE(std::string(bme_last_error()), "");

  const int loop[] = {0, 0};
  EXPECT_EQ(bme_graph_from_edges(2, loop, 1, &g), BME_ERR_STRUCTURE);
  const int out_of_range[] = {0, 5};
  EXPECT_EQ(bme_graph_from_edges(2, out_of_range, 1, &g), BME_ERR_ARGUMENT);
  EXPECT_EQ(bme_graph_from_graph6(nullptr, &g), BME_ERR_ARGUMENT);

  char* out = reinterpret_cast<char*>(0x1);
  EXPECT_EQ(bme_enumerate(13, 0, BME_FORMAT_JSON, &out), BME_ERR_CAPACITY);
  EXPECT_EQ(bme_rank(5, 1, BME_FORMAT_JSON, &out), BME_ERR_CAPACITY);
  const int params[] = {3};
  EXPECT_EQ(bme_family_describe("wheel", params, 1, 0, -1, BME_FORMAT_JSON, &out),
            BME_ERR_ARGUMENT);
  int passed = 7;
  EXPECT_EQ(bme_verify_thm36({5, 6}, 30, 1, BME_FORMAT_JSON, &out, &passed),
            BME_ERR_ARGUMENT);
  EXPECT_NE(std::string(bme_last_error()).find("n > 5"), std::string::npos);
  EXPECT_EQ(out, reinterpret_cast<char*>(0x1));
  EXPECT_EQ(passed, 7);

  GraphPtr c5 = FromGraph6("Dhc");
  char* label = nullptr;
  EXPECT_EQ(bme_classify(c5.get(), &label), BME_ERR_STRUCTURE);
  double value = 0, bound = 0;
  EXPECT_EQ(bme_me_value(c5.get(), static_cast<bme_method>(9), 0, &value, &bound),
            BME_ERR_ARGUMENT);
}

TEST(CApiTest, LastErrorIsPerThread) {
  bme_graph* g = nullptr;
  ASSERT_EQ(bme_graph_from_graph6("D", &g), BME_ERR_PARSE);
  std::string other;
  std::thread([&] { other = bme_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(bme_last_error()), "");
}

TEST(CApiTest, Energy) {
  GraphPtr bowtie = FromGraph6("D{c");
  double value = 0, bound = 1;
  ASSERT_EQ(bme_me_value(bowtie.get(), BME_METHOD_ROOTS, 0, &value, &bound), BME_OK);
  EXPECT_NEAR(value, 2 + 2 * std::sqrt(5.0), 1e-12);
  EXPECT_LE(bound, 1e-10);
  ASSERT_EQ(bme_me_value(bowtie.get(), BME_METHOD_COULSON, 1e-8, &value, &bound),
            BME_OK);
  EXPECT_NEAR(value, 2 + 2 * std::sqrt(5.0), 1e-8);

  char* out = nullptr;
  ASSERT_EQ(bme_me(bowtie.get(), BME_METHOD_BOTH, 0, BME_FORMAT_JSON, &out), BME_OK);
  const json j = json::parse(Take(out));
  EXPECT_EQ(j["method"], "both");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["graph6"], "D{c");
  EXPECT_LE(std::abs(j["difference"].get<double>()), 1e-6);

  ASSERT_EQ(bme_me(bowtie.get(), BME_METHOD_ROOTS, 0, BME_FORMAT_CSV, &out), BME_OK);
  const std::string row = Take(out);
  EXPECT_EQ(row.rfind("D{c,", 0), 0u);
  EXPECT_EQ(row.back(), '\n');
  EXPECT_NE(std::string(bme_me_csv_header()).find("error_bound"), std::string::npos);
}

TEST(CApiTest, MpolyMatchesGolden) {
  GraphPtr bowtie = FromGraph6("D{c");
  char* out = nullptr;
  ASSERT_EQ(bme_mpoly(bowtie.get(), BME_FORMAT_JSON, &out), BME_OK);
  std::ifstream golden(std::string(BME_GOLDEN_DIR) + "/mpoly_bowtie.json");
  ASSERT_TRUE(golden);
  EXPECT_EQ(json::parse(Take(out)), json::parse(golden));
  ASSERT_EQ(bme_mpoly(bowtie.get(), BME_FORMAT_CSV, &out), BME_OK);
  EXPECT_EQ(Take(out), "D{c,5,1 6 5,0 5 0 -6 0 1\n");
}

TEST(CApiTest, Families) {
  const int params[] = {4, 3};
  bme_graph* raw = nullptr;
  ASSERT_EQ(bme_family_build("Bp_nab_t", params, 2, 2, 1, &raw), BME_OK);
  GraphPtr g(raw);
  EXPECT_EQ(bme_graph_order(g.get()), 8);
  char* out = nullptr;
  ASSERT_EQ(bme_family_describe("Bp_nab_t", params, 2, 2, 1, BME_FORMAT_JSON, &out),
            BME_OK);
  std::ifstream golden(std::string(BME_GOLDEN_DIR) + "/family_bpnab.json");
  EXPECT_EQ(json::parse(Take(out)), json::parse(golden));
  const int theta[] = {3, 3, 2};
  ASSERT_EQ(bme_family_describe("theta", theta, 3, 0, -1, BME_FORMAT_TEXT, &out),
            BME_OK);
  EXPECT_EQ(Take(out), "C}\n");
}

TEST(CApiTest, EnumerateAndRank) {
  char* out = nullptr;
  ASSERT_EQ(bme_enumerate(6, 0, BME_FORMAT_JSON, &out), BME_OK);
  EXPECT_EQ(json::parse(Take(out))["count"], 19);
  ASSERT_EQ(bme_enumerate(5, 1, BME_FORMAT_TEXT, &out), BME_OK);
  const std::string text = Take(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
  EXPECT_NE(text.find(" theta("), std::string::npos);
  ASSERT_EQ(bme_rank(6, 2, BME_FORMAT_JSON, &out), BME_OK);
  std::ifstream golden(std::string(BME_GOLDEN_DIR) + "/rank_6.json");
  const json rank = json::parse(Take(out));
  const json expected = json::parse(golden);
  ASSERT_EQ(rank["entries"].size(), expected["entries"].size());
  for (std::size_t i = 0; i < rank["entries"].size(); ++i) {
    EXPECT_EQ(rank["entries"][i]["graph6"], expected["entries"][i]["graph6"]);
  }
}

TEST(CApiTest, Verify) {
  bme_range r{};
  ASSERT_EQ(bme_parse_range("3:5", &r), BME_OK);
  EXPECT_EQ(r.lo, 3);
  EXPECT_EQ(r.hi, 5);
  ASSERT_EQ(bme_parse_range("4", &r), BME_OK);
  EXPECT_EQ(r.lo, 4);
  EXPECT_EQ(r.hi, 4);
  EXPECT_EQ(bme_parse_range("a:b", &r), BME_ERR_ARGUMENT);

  char* out = nullptr;
  int passed = -1;
  ASSERT_EQ(bme_verify_lemma31({3, 4}, {3, 3}, {1, 2}, BME_FORMAT_JSON, &out, &passed),
            BME_OK);
  EXPECT_EQ(passed, 1);
  std::ifstream golden(std::string(BME_GOLDEN_DIR) + "/verify_lemma31.json");
  EXPECT_EQ(json::parse(Take(out)), json::parse(golden));

  ASSERT_EQ(bme_verify_thm34({4, 5}, {3, 3}, {1, 1}, BME_FORMAT_CSV, &out, &passed),
            BME_OK);
  EXPECT_EQ(passed, 1);
  bme_string_free(out);
  ASSERT_EQ(bme_verify_thm36({6, 6}, 8, 1, BME_FORMAT_JSON, &out, &passed), BME_OK);
  EXPECT_EQ(passed, 0);
  EXPECT_EQ(json::parse(Take(out))["coefficients_pass"], true);
}

}  // namespace
