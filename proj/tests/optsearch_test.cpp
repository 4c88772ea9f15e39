#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "resilset/construct.hpp"
#include "resilset/optsearch.hpp"

namespace resil {
namespace {

const DefiningSet kOptimalT2{2, {{{1, 8}, {3, 6}}, {{2, 7}, {4, 5}}}};
const DefiningSet kConsecutiveT2{2, {{{1, 4}, {2, 3}}, {{5, 8}, {6, 7}}}};

bool contains(const std::vector<DefiningSet>& v, const DefiningSet& ds) {
  return std::find(v.begin(), v.end(), ds) != v.end();
}

TEST(Enumerate, T1) {
  const auto all = all_balanced(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], (DefiningSet{1, {{{1, 4}, {2, 3}}}}));
}

TEST(Enumerate, T2IncludesBothExamples) {
  const auto all = all_balanced(2);
  EXPECT_EQ(all.size(), 6u);
  EXPECT_TRUE(contains(all, kOptimalT2));
  EXPECT_TRUE(contains(all, kConsecutiveT2));
}

TEST(Enumerate, MatchesNaivePartitionEnumerator) {
  const std::size_t frozen[] = {1, 6, 86};
  for (int t = 1; t <= 3; ++t) {
    std::set<std::vector<Rank>> keys;
    for (const auto& ds : all_balanced(t)) {
      EXPECT_TRUE(validate_defining_set(ds).ok());
      EXPECT_EQ(canonical_form(ds), ds);
      keys.insert(oracle::key_of(ds));
    }
    EXPECT_EQ(keys, oracle::balanced_partitions(t));
    EXPECT_EQ(keys.size(), frozen[t - 1]);
  }
}

TEST(Enumerate, T4Count) { EXPECT_EQ(all_balanced(4).size(), 1990u); }

TEST(Sample, ValidAndSeedDeterministic) {
  std::mt19937_64 a(5), b(5);
  for (int k = 0; k < 200; ++k) {
    const int t = 1 + k % 6;
    const auto x = sample_balanced(t, a);
    EXPECT_TRUE(validate_defining_set(x).ok());
    EXPECT_EQ(x, sample_balanced(t, b));
  }
}

TEST(FindOptimal, T1) {
  const auto r = find_optimal(1);
  EXPECT_EQ(r.d_star, 2);
  ASSERT_EQ(r.optima.size(), 1u);
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.candidates_examined, 1u);
}

TEST(FindOptimal, T2) {
  const auto r = find_optimal(2);
  EXPECT_EQ(r.d_star, 4);
  EXPECT_TRUE(contains(r.optima, kOptimalT2));
  EXPECT_EQ(r.optima.size(), 1u);
  EXPECT_EQ(r.candidates_examined, 6u);
}

TEST(FindOptimal, T3RegressionValue) {
  const auto r = find_optimal(3);
  EXPECT_EQ(r.d_star, 6);
  EXPECT_EQ(r.optima.size(), 10u);
  EXPECT_GE(r.d_star, lower_bound(3).ceil());
}

TEST(FindOptimal, T4UniqueOptimumIsBaseCase) {
  const auto r = find_optimal(4);
  EXPECT_EQ(r.d_star, 6);
  ASSERT_EQ(r.optima.size(), 1u);
  EXPECT_EQ(r.optima[0], canonical_form(base_case()));
  EXPECT_EQ(r.optima_up_to_reflection, 1u);
  EXPECT_TRUE(r.certified);
}

TEST(FindOptimal, T5RegressionValue) {
  const auto r = find_optimal(5);
  EXPECT_EQ(r.d_star, 8);
  EXPECT_EQ(r.optima.size(), 1u);
  EXPECT_EQ(r.candidates_examined, 74323u);
}

TEST(FindOptimal, ParallelMatchesSequential) {
  const auto a = find_optimal(3);
  const auto b = find_optimal(3, {.workers = 3});
  EXPECT_EQ(a.d_star, b.d_star);
  EXPECT_EQ(a.optima, b.optima);
}

TEST(FindOptimal, ZeroBudgetIsUncertified) {
  const auto r = find_optimal(4, {.time_budget = std::chrono::milliseconds(0)});
  EXPECT_FALSE(r.certified);
}

TEST(FindOptimal, Refusals) {
  EXPECT_THROW(find_optimal(0), InvalidInput);
  EXPECT_THROW(find_optimal(kSearchLimit + 1), SizeRefusal);
}

}  // namespace
}  // namespace resil
