#pragma once

// Recursive doubling construction of balanced defining sets for
// t = 5·2^(z−2) − 1, and the closed-form discrepancy bounds.

#include <compare>
#include <cstdint>
#include <string>

#include "resilset/adversary.hpp"
#include "resilset/core.hpp"

namespace resil {

// Exact rational, always normalized with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::int64_t ceil() const;
  std::string to_string() const;  // "p/q", or "p" when den == 1

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);
};

struct ConstructionParams {
  int z = 2;
  static ConstructionParams make(int z);  // throws for z < 2
  std::int64_t t() const;                 // 5·2^(z−2) − 1
  std::int64_t ranks() const { return 4 * t(); }
};

// Default ceiling on 4t for construct_for_z.
inline constexpr std::int64_t kDefaultRankCap = std::int64_t{1} << 24;

// The t = 4 optimum the recursion starts from.
DefiningSet base_case();

// Level z -> level z + 1: copy shifted by +1, copy shifted by 5·2^z − 1, then
// the closing pair ({1, 5·2^(z+1)−4}, {5·2^z−2, 5·2^z−1}).
DefiningSet recursive_step(const DefiningSet& prev, int z);

DefiningSet construct_for_z(int z, std::int64_t rank_cap = kDefaultRankCap);

// (3t − 2) / 2.
Rational lower_bound(std::int64_t t);
// 2^(z+1) − 2.
std::int64_t upper_bound(int z);
// (8t − 2) / 5; equals upper_bound(z) on the construction family.
Rational upper_bound_for_t(std::int64_t t);

struct Lemma1Report {
  int z = 2;
  std::int64_t d_z = 0;
  std::int64_t d_z_plus_1 = 0;
  bool holds = false;  // d_{z+1} ≤ 2·d_z + 2
};

// Exact d_z and d_{z+1} on the construction. Both levels must fit the
// exhaustive envelope unless options.force_exhaustive is set.
Lemma1Report check_lemma1(int z, const AdversaryOptions& options = {});

}  // namespace resil
