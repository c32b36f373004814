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

#include <random>
#include <set>
#include <utility>

#include "dea/oracle.hpp"
#include "support/fixtures.hpp"

namespace dea {
namespace {

using testing::integers;
using testing::ints;
using testing::make_dataset;
using testing::make_dmu;
using Labeled = std::set<std::pair<IntegerVector, FacetKind>>;

Labeled labeled(const FacetReport& r) {
  Labeled out;
  for (const auto& h : r.facets) out.emplace(h.coefficients, h.kind);
  return out;
}

std::set<IntegerVector> coefficients(const FacetReport& r) {
  std::set<IntegerVector> out;
  for (const auto& h : r.facets) out.insert(h.coefficients);
  return out;
}

std::set<IntegerVector> dual(const Dataset& d) {
  auto v = dual_cone_facets(d, classify(d));
  return {v.begin(), v.end()};
}

TEST(Binomial, ValuesAndSaturation) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(10, 0), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(50, 5), 2118760u);
  EXPECT_EQ(binomial(1000, 500), std::numeric_limits<std::uint64_t>::max());
}

TEST(BruteForce, MatchesSearchOnFixtures) {
  for (const Dataset& d : {testing::small_example(), testing::two_by_two_example()}) {
    FacetReport search = find_facets(d);
    FacetReport brute = brute_force_facets(d);
    EXPECT_EQ(labeled(brute), labeled(search));
    ASSERT_EQ(brute.facets.size(), search.facets.size());
    for (std::size_t i = 0; i < brute.facets.size(); ++i) {
      EXPECT_EQ(brute.facets[i].incidence, search.facets[i].incidence);
    }
  }
}

TEST(BruteForce, MatchesSearchOnRandomData) {
  std::mt19937 rng(51);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Dataset d = testing::random_dataset(rng);
    FacetReport search = find_facets(d);
    if (search.pool.size() > 12) continue;
    EXPECT_EQ(labeled(brute_force_facets(d)), labeled(search)) << to_csv(d);
    ++compared;
  }
  EXPECT_GE(compared, 100);
}

TEST(BruteForce, GuardRefusesLargePools) {
  OracleLimits tight;
  tight.max_subsets = 10;  // C(5, 2) fits, C(10, 3) does not
  EXPECT_THROW(brute_force_facets(testing::two_by_two_example(), {}, tight), GuardExceeded);
  EXPECT_NO_THROW(brute_force_facets(testing::small_example(), {}, tight));
}

TEST(DualCone, SmallExample) {
  EXPECT_EQ(dual(testing::small_example()), (std::set<IntegerVector>{integers({-5, -1, 3}), integers({-3, -5, 4}),
                                                              integers({-3, 0, 1}), integers({0, -5, 1})}));
}

TEST(DualCone, MatchesSearchOnFixtures) {
  for (const Dataset& d : {testing::small_example(), testing::two_by_two_example(), testing::bank()}) {
    EXPECT_EQ(dual(d), coefficients(find_facets(d)));
  }
}

TEST(DualCone, MatchesSearchOnRandomData) {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    Dataset d = testing::random_dataset(rng);
    EXPECT_EQ(dual(d), coefficients(find_facets(d))) << to_csv(d);
  }
}

TEST(DualCone, DimensionGuard) {
  OracleLimits tight;
  tight.max_dimension = 3;
  Dataset d = testing::two_by_two_example();
  EXPECT_THROW(dual_cone_facets(d, classify(d), tight), GuardExceeded);
}

TEST(Oracles, LoneDmuHasNoSeparatedFacet) {
  Dataset d = make_dataset(1, 1, {make_dmu("A", ints({2}), ints({3}))});
  EXPECT_TRUE(dual(d).empty());
  EXPECT_TRUE(brute_force_facets(d).facets.empty());
  EXPECT_TRUE(find_facets(d).facets.empty());
}

}  // namespace
}  // namespace dea
