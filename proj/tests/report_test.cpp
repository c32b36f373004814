// Copyright 2026 The dea-facets Authors
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

#include <gtest/gtest.h>

#include <string>

#include "dea/report.hpp"
#include "support/fixtures.hpp"

namespace dea {
namespace {

using testing::integers;

TEST(Equation, RendersSignedTermsInputsFirst) {
  Dataset d = testing::two_by_two_example();
  EXPECT_EQ(equation(integers({-23, 0, 6, 1}), d), "-23*x1 + 6*y1 + 1*y2 = 0");
  EXPECT_EQ(equation(integers({-1, -55, 17, 12}), d), "-1*x1 - 55*x2 + 17*y1 + 12*y2 = 0");
  EXPECT_EQ(equation(integers({0, -5, 0, 2}), d), "-5*x2 + 2*y2 = 0");
}

TEST(Equation, UsesColumnNames) {
  Dataset d = testing::bank();
  EXPECT_EQ(equation(integers({-1, 0, 0, 2, 0, 0}), d), "-1*staff + 2*deposits = 0");
}

TEST(RenderClassification, GridLayout) {
  Dataset d = testing::two_by_two_example();
  std::string text = render_classification(d, classify(d));
  EXPECT_NE(text.find("DMU  l=1    l=2    q=1    q=2\n"), std::string::npos);
  EXPECT_NE(text.find("D1   FES    INFES  FES    INFES\n"), std::string::npos);
  EXPECT_NE(text.find("D2   INFES  INFES  INFES  FES\n"), std::string::npos);
  EXPECT_NE(text.find("D4   INFES  FES    FES    INFES\n"), std::string::npos);
  EXPECT_NE(text.find("13/14"), std::string::npos);
  EXPECT_NE(text.find("3 of 5 DMUs strong efficient"), std::string::npos);
  EXPECT_EQ(text.find(" \n"), std::string::npos);
}

TEST(RenderFacets, LinesAndSummary) {
  FacetReport r = find_facets(testing::small_example());
  std::string text = render_facets(r, false);
  EXPECT_NE(text.find("-3*x1 + 1*y = 0 [weak] on: D1 D1+x2\n"), std::string::npos);
  EXPECT_NE(text.find("-5*x2 + 1*y = 0 [weak] on: D3 D3+x1\n"), std::string::npos);
  EXPECT_NE(text.find("\n2 weak, 2 strong\n"), std::string::npos);
  EXPECT_EQ(text.find("from"), std::string::npos);
  std::string with = render_facets(r, true);
  EXPECT_NE(with.find("    from {D1, D1+x2}\n"), std::string::npos);
}

TEST(RenderFacets, NoFloatingPointAnywhere) {
  Dataset d = testing::bank();
  std::string text = render_classification(d, classify(d)) + render_facets(find_facets(d), false);
  EXPECT_EQ(text.find('.'), std::string::npos);
}

TEST(Json, SchemaAndKeyOrder) {
  FacetReport r = find_facets(testing::small_example());
  nlohmann::ordered_json doc = facet_report_json(r, true);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc.begin().key(), "schema");
  const auto& row = doc["classification"][0];
  std::vector<std::string> keys;
  for (auto it = row.begin(); it != row.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "status", "extreme", "axis"}));
  EXPECT_EQ(row["axis"]["inputs"], (nlohmann::ordered_json{"FES", "INFES"}));
  EXPECT_TRUE(doc["classification"][3]["extreme"].is_null());
  const auto& f = doc["facets"][2];
  EXPECT_EQ(f["coeff_in"], (nlohmann::ordered_json{-3, 0}));
  EXPECT_EQ(f["coeff_out"], (nlohmann::ordered_json{1}));
  EXPECT_EQ(f["kind"], "weak");
  EXPECT_EQ(f["incident"], (nlohmann::ordered_json{"D1", "D1+x2"}));
  EXPECT_EQ(f["witnesses"], nlohmann::ordered_json::array({nlohmann::ordered_json::array({"D1", "D1+x2"})}));
  EXPECT_FALSE(facet_report_json(r, false)["facets"][0].contains("witnesses"));
}

TEST(Json, WideIntegersBecomeStrings) {
  EXPECT_EQ(detail::integer_json(Integer(-42)), -42);
  Integer huge("123456789012345678901234567890");
  EXPECT_EQ(detail::integer_json(huge), "123456789012345678901234567890");
  EXPECT_EQ(detail::integer_json(Integer(std::numeric_limits<std::int64_t>::min())),
            std::numeric_limits<std::int64_t>::min());
}

TEST(Json, Deterministic) {
  for (const Dataset& d : {testing::small_example(), testing::two_by_two_example()}) {
    EXPECT_EQ(facet_report_json(find_facets(d), true).dump(2), facet_report_json(find_facets(d), true).dump(2));
    EXPECT_EQ(analysis_json(d, classify(d)).dump(), analysis_json(d, classify(d)).dump());
  }
}

}  // namespace
}  // namespace dea
