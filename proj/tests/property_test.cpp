// Randomized invariant checks. Each property draws at least 10^4 cases from
// hand-rolled generators with fixed seeds.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "resilset/adversary.hpp"
#include "resilset/graphs.hpp"
#include "resilset/optsearch.hpp"

namespace resil {
namespace {

constexpr int kCases = 10000;

// Any partition of [1, 4t] into t companion pairs, balanced or not.
DefiningSet random_partition(int t, std::mt19937_64& rng) {
  std::vector<Rank> ranks(static_cast<std::size_t>(4 * t));
  std::iota(ranks.begin(), ranks.end(), 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  DefiningSet ds{t, {}};
  for (int k = 0; k < t; ++k) {
    const auto* r = &ranks[static_cast<std::size_t>(4 * k)];
    ds.pairs.emplace_back(std::array<Rank, 2>{r[0], r[1]},
                          std::array<Rank, 2>{r[2], r[3]});
  }
  return ds;
}

oracle::Mask random_matching(int t, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double density = u(rng);
  oracle::Mask m = 0;
  for (int k = 0; k < 4 * t - 1; ++k) {
    if (u(rng) < density) {
      m |= oracle::Mask{1} << k;
      ++k;
    }
  }
  return m;
}

int random_t(std::mt19937_64& rng, int hi) {
  return std::uniform_int_distribution<int>(1, hi)(rng);
}

TEST(Property, ApplySwapsIsAnInvolution) {
  std::mt19937_64 rng(1);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 8);
    const auto ds = random_partition(t, rng);
    const auto swaps = oracle::to_swap_set(t, random_matching(t, rng));
    ASSERT_EQ(apply_swaps(apply_swaps(ds, swaps), swaps), ds);
  }
}

TEST(Property, DiscrepancyMatchesRelabelOracle) {
  std::mt19937_64 rng(2);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 8);
    const auto ds = random_partition(t, rng);
    const auto m = random_matching(t, rng);
    ASSERT_EQ(discrepancy(ds, oracle::to_swap_set(t, m)),
              oracle::discrepancy(ds, m));
  }
}

TEST(Property, DiscrepancyOfBalancedSetIsEven) {
  std::mt19937_64 rng(3);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 8);
    const auto ds = sample_balanced(t, rng);
    const auto swaps = oracle::to_swap_set(t, random_matching(t, rng));
    ASSERT_EQ(discrepancy(ds, swaps) % 2, 0);
  }
}

TEST(Property, DiscrepancyReflectionInvariant) {
  std::mt19937_64 rng(4);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 8);
    const auto ds = random_partition(t, rng);
    const auto swaps = oracle::to_swap_set(t, random_matching(t, rng));
    ASSERT_EQ(discrepancy(reflect(ds), reflect(swaps, t)),
              discrepancy(ds, swaps));
    ASSERT_EQ(reflect(reflect(ds)), ds);
  }
}

TEST(Property, CanonicalFormIdempotentAndDiscrepancyPreserving) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 8);
    const auto ds = sample_balanced(t, rng);
    const auto canon = canonical_form(ds);
    ASSERT_EQ(canonical_form(canon), canon);
    const auto swaps = oracle::to_swap_set(t, random_matching(t, rng));
    ASSERT_EQ(discrepancy(canon, swaps), discrepancy(ds, swaps));
  }
}

TEST(Property, BalancedPairingIsOuterInner) {
  std::mt19937_64 rng(6);
  for (int c = 0; c < kCases; ++c) {
    const auto ds = sample_balanced(random_t(rng, 8), rng);
    for (const auto& cp : ds.pairs) {
      const auto s = cp.sorted();
      ASSERT_EQ(s[1] - s[0], s[3] - s[2]);
      // Only one of the three pairings balances.
      int balanced = (s[0] + s[1] == s[2] + s[3]) +
                     (s[0] + s[2] == s[1] + s[3]) +
                     (s[0] + s[3] == s[1] + s[2]);
      ASSERT_EQ(balanced, 1);
    }
  }
}

TEST(Property, GraphInvariants) {
  std::mt19937_64 rng(7);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 6);
    const auto ds = sample_balanced(t, rng);
    const auto swaps = oracle::to_swap_set(t, random_matching(t, rng));
    const auto membership =
        (c % 2 == 0) ? Membership::original : Membership::primed;
    const auto swp = build_swp(ds, swaps);
    const auto pot = build_pot(ds, swaps, membership);
    ASSERT_EQ(swp.edges.size(), swaps.size());
    ASSERT_EQ(pot_out_degree(pot, 0), 0);
    ASSERT_LE(pot_in_degree(pot, 0), 2);

    std::vector<int> all(static_cast<std::size_t>(t) + 1);
    std::iota(all.begin(), all.end(), 0);
    ASSERT_EQ(arcs_into(pot, all), 0);
    ASSERT_EQ(arcs_out_of(pot, all), 0);
    int in = 0, out = 0;
    for (int v = 0; v <= t; ++v) {
      in += pot_in_degree(pot, v);
      out += pot_out_degree(pot, v);
    }
    ASSERT_EQ(in, out);

    const auto diffs = primed_differences(ds, swaps);
    for (const auto& a : pot.arcs) {
      ASSERT_FALSE(swaps.contains(a.low));
      ASSERT_GE(a.tail, 1);
      ASSERT_LE(a.head, t);
      const auto d = diffs[static_cast<std::size_t>(a.tail - 1)];
      if (a.rule == ArcRule::cond5 || a.rule == ArcRule::cond6 ||
          a.rule == ArcRule::boundary2) {
        ASSERT_EQ(d, 0);
      } else {
        ASSERT_NE(d, 0);
      }
    }
  }
}

TEST(Property, WorstCaseAgreesWithBruteForceAndIsEven) {
  std::mt19937_64 rng(8);
  for (int c = 0; c < kCases; ++c) {
    const int t = random_t(rng, 2);
    const auto ds = sample_balanced(t, rng);
    const auto r = worst_case(ds);
    const auto brute = oracle::worst_case(ds);
    ASSERT_EQ(r.worst_case, brute.worst);
    ASSERT_EQ(r.worst_case % 2, 0);
    ASSERT_EQ(r.worst_case, worst_case(reflect(ds)).worst_case);
  }
}

TEST(Property, MinimalMaximizerPropertyAtT3) {
  std::mt19937_64 rng(9);
  for (int c = 0; c < 2000; ++c) {
    const auto ds = sample_balanced(3, rng);
    const auto r = worst_case(ds);
    ASSERT_TRUE(minimal_maximizer_property(ds, r)) << to_string(ds);
  }
}

}  // namespace
}  // namespace resil
