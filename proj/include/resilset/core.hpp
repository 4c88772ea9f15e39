#pragma once

// Domain types for balanced defining sets: companion pairs, adjacent-swap
// perturbations, the total discrepancy functional, and the structural type
// classification of balanced pairs.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace resil {

using Rank = std::int32_t;

// Thrown for malformed inputs to operations with preconditions. Validation
// reports (validate_defining_set) never throw.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an instance exceeds a configured feasibility envelope.
class SizeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side : std::int8_t { odd = 1, even = -1 };

// Two 2-element sets of ranks. Each set is stored sorted; the odd/even roles
// are kept exactly as given.
struct CompanionPair {
  std::array<Rank, 2> odd{};
  std::array<Rank, 2> even{};

  CompanionPair() = default;
  CompanionPair(std::array<Rank, 2> odd_set, std::array<Rank, 2> even_set);

  std::int64_t odd_sum() const { return std::int64_t{odd[0]} + odd[1]; }
  std::int64_t even_sum() const { return std::int64_t{even[0]} + even[1]; }
  // Σ(odd) − Σ(even).
  std::int64_t difference() const { return odd_sum() - even_sum(); }
  bool balanced() const { return difference() == 0; }
  bool contains(Rank r) const;
  std::optional<Side> side_of(Rank r) const;
  // ℓ1 ≤ ℓ2 ≤ ℓ3 ≤ ℓ4.
  std::array<Rank, 4> sorted() const;
  Rank min() const { return sorted()[0]; }

  friend bool operator==(const CompanionPair&, const CompanionPair&) = default;
  friend auto operator<=>(const CompanionPair&, const CompanionPair&) = default;
};

struct DefiningSet {
  int t = 0;
  std::vector<CompanionPair> pairs;

  Rank max_rank() const { return 4 * t; }

  friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

// The adjacent transposition (low, low + 1).
struct Swap {
  Rank low = 0;
  Rank high() const { return low + 1; }
  friend auto operator<=>(const Swap&, const Swap&) = default;
};

// A matching of the path graph on [1, 4t]: disjoint adjacent swaps, kept
// sorted by their low endpoint.
class SwapSet {
 public:
  SwapSet() = default;

  // Validates range (1 ≤ low ≤ 4t − 1) and disjointness.
  static SwapSet make(int t, std::span<const Swap> swaps);
  static SwapSet make(int t, std::initializer_list<Rank> lows);
  // Caller guarantees the lows are strictly increasing, in range, and
  // pairwise at least 2 apart.
  static SwapSet from_sorted_unchecked(std::vector<Swap> swaps);

  const std::vector<Swap>& swaps() const { return swaps_; }
  std::size_t size() const { return swaps_.size(); }
  bool empty() const { return swaps_.empty(); }
  bool contains(Rank low) const;
  auto begin() const { return swaps_.begin(); }
  auto end() const { return swaps_.end(); }

  friend bool operator==(const SwapSet&, const SwapSet&) = default;

 private:
  explicit SwapSet(std::vector<Swap> swaps) : swaps_(std::move(swaps)) {}
  std::vector<Swap> swaps_;
};

struct Violation {
  // 1-based pair index, or 0 when the violation is not tied to one pair.
  int pair_index = 0;
  std::string constraint;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_defining_set(const DefiningSet& ds);
// Partition and cardinality only; balance is not required.
bool is_partition(const DefiningSet& ds);

// rank -> (pair, side) lookup over [1, 4t]. Requires a partition.
class RankIndex {
 public:
  explicit RankIndex(const DefiningSet& ds);

  int t() const { return t_; }
  // 0-based pair index holding rank r.
  int pair_of(Rank r) const { return pair_[static_cast<std::size_t>(r)]; }
  Side side_of(Rank r) const { return side_[static_cast<std::size_t>(r)]; }

 private:
  int t_;
  std::vector<int> pair_;
  std::vector<Side> side_;
};

DefiningSet apply_swaps(const DefiningSet& ds, const SwapSet& swaps);
std::int64_t discrepancy(const DefiningSet& ds, const SwapSet& swaps);
// Per-pair Σ(S′_odd) − Σ(S′_even) after the swaps.
std::vector<std::int64_t> primed_differences(const DefiningSet& ds,
                                             const SwapSet& swaps);

enum class PairKind { type1 = 1, type2 = 2, type3 = 3 };

struct PairType {
  PairKind kind = PairKind::type3;
  Rank a = 0;
  Rank b = 0;
  Rank c = 0;  // Type 2 only
  friend bool operator==(const PairType&, const PairType&) = default;
};

PairType classify_pair(const CompanionPair& cp);

struct CandidateSwap {
  Rank low = 0;
  // An endpoint lies outside [1, 4t]: (0,1) or (4t,4t+1).
  bool boundary = false;
  // Shares an endpoint with another swap of the same group.
  bool overlaps = false;
  friend bool operator==(const CandidateSwap&, const CandidateSwap&) = default;
};

// The two coherent swap families around a Type 1 / Type 2 pair. Every swap in
// `a` moves the pair's difference by `sign_a`; every swap in `b` by −sign_a.
struct SwapGroups {
  std::vector<CandidateSwap> a;
  std::vector<CandidateSwap> b;
  int sign_a = 0;
};

SwapGroups swap_groups(const CompanionPair& cp, int t);

// Effect of the swap (low, low+1) on cp's Σ(odd) − Σ(even), evaluated from
// membership in cp alone. Works for boundary swaps too.
int swap_effect(const CompanionPair& cp, Rank low);

// Odd set holds the pair minimum; pairs ordered by minimum.
DefiningSet canonical_form(const DefiningSet& ds);
// x -> 4t + 1 − x applied to every rank.
DefiningSet reflect(const DefiningSet& ds);
SwapSet reflect(const SwapSet& swaps, int t);

std::string to_string(const CompanionPair& cp);
std::string to_string(const DefiningSet& ds);
std::string to_string(const SwapSet& swaps);
std::string to_string(PairKind kind);

}  // namespace resil
