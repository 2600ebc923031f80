// Copyright 2026 The idealgraph Authors
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

#include "idealgraph/report_io.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "../support/error_matchers.hpp"

namespace idealgraph {
namespace {

TEST(JsonLine, RoundTrip) {
  for (const RingSpec& s : {RingSpec{0, 0, 0, 0}, RingSpec{1, 1}, RingSpec{0, 0},
                            RingSpec{1, 1, 0}, RingSpec{3}}) {
    const auto r = verify_spec(s);
    const std::string line = to_json_line(r);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    const auto back = parse_report_json(line);
    EXPECT_TRUE(back.same_results(r)) << line;
    EXPECT_EQ(back.timings.size(), r.timings.size());
  }
}

TEST(JsonLine, MissingValuesCarryState) {
  const auto j = nlohmann::json::parse(to_json_line(verify_spec(RingSpec{0, 0})));
  EXPECT_EQ(j.at("dim_predicted").at("state"), "out_of_scope");
  EXPECT_EQ(j.at("verdict"), "OUT_OF_SCOPE");
  EXPECT_EQ(j.at("spec"), "F,F");
  EXPECT_FALSE(j.at("connected").get<bool>());
}

TEST(JsonLine, Values) {
  const auto j = nlohmann::json::parse(to_json_line(verify_spec(RingSpec{1, 1})));
  EXPECT_EQ(j.at("dim_oracle"), 3);
  EXPECT_EQ(j.at("sdim_predicted"), 4);
  EXPECT_EQ(j.at("predicted_basis").size(), 3u);
  EXPECT_TRUE(j.at("timings_ms").contains("graph"));
}

TEST(JsonLine, Summary) {
  SweepSummary s{4, 2, 1, 1};
  const auto j = nlohmann::json::parse(to_json_line(s));
  EXPECT_EQ(j.at("summary").at("total"), 4);
  EXPECT_EQ(j.at("summary").at("failed"), 1);
}

TEST(ParseReport, Malformed) {
  EXPECT_ERROR_CODE(parse_report_json("{"), ErrorCode::kMalformedDocument);
  EXPECT_ERROR_CODE(parse_report_json("{}"), ErrorCode::kMalformedDocument);
  auto j = nlohmann::json::parse(to_json_line(verify_spec(RingSpec{1, 1})));
  j["verdict"] = "MAYBE";
  EXPECT_ERROR_CODE(parse_report_json(j.dump()), ErrorCode::kMalformedDocument);
  j["verdict"] = "PASS";
  j["dim_oracle"] = {{"state", "lost"}, {"note", ""}};
  EXPECT_ERROR_CODE(parse_report_json(j.dump()), ErrorCode::kMalformedDocument);
}

TEST(Text, Rendering) {
  const std::string text = to_text(verify_spec(RingSpec{0, 0, 0, 0}));
  EXPECT_NE(text.find("dim=3 predicted=3"), std::string::npos);
  EXPECT_NE(text.find("verdict PASS"), std::string::npos);
  EXPECT_NE(text.find("F x 0 x 0 x 0"), std::string::npos);
}

TEST(Text, Table) {
  const std::vector<VerificationReport> reports{verify_spec(RingSpec{1, 1}),
                                                verify_spec(RingSpec{0, 0})};
  const std::string t = to_table(reports);
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 3);
  EXPECT_NE(t.find("C1,C1"), std::string::npos);
  EXPECT_NE(t.find("OUT_OF_SCOPE"), std::string::npos);
  EXPECT_EQ(to_text(SweepSummary{3, 2, 0, 1}),
            "total=3 passed=2 failed=0 out_of_scope=1");
}

}  // namespace
}  // namespace idealgraph
