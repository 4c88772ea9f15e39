#pragma once

// Exact worst-case discrepancy over every allowed swap set of a defining set.
//
// Swap sets are the matchings of the path graph on [1, 4t]. They are visited
// as the leaves of a binary decision tree over positions 1..4t−1 where, at each
// free position p, the branch placing (p, p+1) is explored before the branch
// skipping it. This is the enumeration order used for every tie-break.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "resilset/core.hpp"

namespace resil {

enum class Strategy { exhaustive, branch_and_bound };

// Largest 4t accepted by the exhaustive strategy without `force_exhaustive`.
inline constexpr Rank kExhaustiveRankLimit = 40;

struct AdversaryOptions {
  Strategy strategy = Strategy::branch_and_bound;
  unsigned workers = 1;
  bool force_exhaustive = false;
  // Stop as soon as some swap set exceeds this value; the result is then
  // marked abandoned and only certifies worst_case > abandon_above.
  std::optional<std::int64_t> abandon_above;
  // Record every maximizing swap set (any cardinality), up to the cap.
  bool collect_maximizers = false;
  std::size_t maximizer_cap = 4096;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct AdversaryResult {
  std::int64_t worst_case = 0;
  SwapSet minimal_maximizer;
  std::uint64_t maximizer_count = 0;
  // Complete swap sets evaluated (leaves reached).
  std::uint64_t enumerated = 0;
  bool abandoned = false;
  // False when the deadline expired before the search finished.
  bool complete = true;
  std::vector<SwapSet> maximizers;
};

// Number of matchings of the path on n vertices: Fibonacci(n + 1).
std::uint64_t count_swap_sets(int t);

// Visits every swap set of [1, 4t] once, in enumeration order.
void for_each_swap_set(int t, const std::function<void(const SwapSet&)>& visit);

// Requires a valid, balanced ds. Throws SizeRefusal for an exhaustive run
// with 4t > kExhaustiveRankLimit unless forced.
AdversaryResult worst_case(const DefiningSet& ds,
                           const AdversaryOptions& options = {});

// worst_case == 2·|I*| and dropping any single swap of I* lowers the
// discrepancy by exactly 2.
bool minimal_maximizer_property(const DefiningSet& ds,
                                const AdversaryResult& result);

}  // namespace resil
