#pragma once

// Exhaustive search for D*(t): the minimum worst-case discrepancy over all
// balanced defining sets, enumerated in canonical form.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "resilset/core.hpp"

namespace resil {

// Canonical balanced defining sets of [1, 4t] in enumeration order: the
// smallest unassigned rank ℓ1 is paired with every ℓ2 < ℓ3 such that
// ℓ4 = ℓ2 + ℓ3 − ℓ1 is free and ≤ 4t.
void enumerate_balanced(int t,
                        const std::function<void(const DefiningSet&)>& visit);
std::vector<DefiningSet> all_balanced(int t);

// A random balanced defining set: randomized depth-first completion followed
// by random role swaps and pair order. Not uniform over defining sets.
DefiningSet sample_balanced(int t, std::mt19937_64& rng);

// Largest t searched without `force`.
inline constexpr int kSearchLimit = 6;

struct SearchOptions {
  unsigned workers = 1;
  std::optional<std::chrono::milliseconds> time_budget;
  bool force = false;
};

struct SearchResult {
  int t = 0;
  std::int64_t d_star = 0;
  // Canonical minimizers in enumeration order.
  std::vector<DefiningSet> optima;
  // Optima counted up to the reflection x -> 4t + 1 − x.
  std::size_t optima_up_to_reflection = 0;
  std::uint64_t candidates_examined = 0;
  std::chrono::milliseconds wall_time{0};
  // False when the budget expired before every candidate was evaluated.
  bool certified = true;
};

SearchResult find_optimal(int t, const SearchOptions& options = {});

}  // namespace resil
