#include "resilset/construct.hpp"

#include <numeric>

namespace resil {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

std::int64_t Rational::ceil() const {
  const auto q = num / den;
  return (num % den > 0) ? q + 1 : q;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return x.num * y.den <=> y.num * x.den;
}

ConstructionParams ConstructionParams::make(int z) {
  if (z < 2) {
    throw InvalidInput("construction level requires z >= 2, got z = " +
                       std::to_string(z));
  }
  if (z > 58) throw SizeRefusal("construction level z too large");
  return ConstructionParams{z};
}

std::int64_t ConstructionParams::t() const {
  return 5 * (std::int64_t{1} << (z - 2)) - 1;
}

DefiningSet base_case() {
  return DefiningSet{4,
                     {
                         CompanionPair({1, 16}, {8, 9}),
                         CompanionPair({2, 7}, {4, 5}),
                         CompanionPair({10, 15}, {12, 13}),
                         CompanionPair({3, 14}, {6, 11}),
                     }};
}

namespace {

CompanionPair shifted(const CompanionPair& cp, Rank by) {
  return CompanionPair({cp.odd[0] + by, cp.odd[1] + by},
                       {cp.even[0] + by, cp.even[1] + by});
}

}  // namespace

DefiningSet recursive_step(const DefiningSet& prev, int z) {
  const auto level = ConstructionParams::make(z);
  if (prev.t != level.t() ||
      static_cast<std::int64_t>(prev.pairs.size()) != level.t()) {
    throw InvalidInput("recursive_step: expected level z = " +
                       std::to_string(z) + " input with t = " +
                       std::to_string(level.t()) + ", got t = " +
                       std::to_string(prev.t));
  }
  if (!validate_defining_set(prev).ok()) {
    throw InvalidInput("recursive_step: level-z input is not a balanced "
                       "defining set over [1," +
                       std::to_string(level.ranks()) + "]");
  }
  const Rank p = static_cast<Rank>(std::int64_t{5} << z);  // 5·2^z
  DefiningSet next{static_cast<int>(ConstructionParams{z + 1}.t()), {}};
  next.pairs.reserve(static_cast<std::size_t>(next.t));
  for (const auto& cp : prev.pairs) next.pairs.push_back(shifted(cp, 1));
  for (const auto& cp : prev.pairs) next.pairs.push_back(shifted(cp, p - 1));
  next.pairs.emplace_back(std::array<Rank, 2>{1, 2 * p - 4},
                          std::array<Rank, 2>{p - 2, p - 1});
  return next;
}

DefiningSet construct_for_z(int z, std::int64_t rank_cap) {
  const auto level = ConstructionParams::make(z);
  if (level.ranks() > rank_cap) {
    throw SizeRefusal("construction for z = " + std::to_string(z) +
                      " has 4t = " + std::to_string(level.ranks()) +
                      " ranks, above the cap of " + std::to_string(rank_cap));
  }
  DefiningSet ds = base_case();
  for (int k = 2; k < z; ++k) ds = recursive_step(ds, k);
  return ds;
}

Rational lower_bound(std::int64_t t) {
  if (t < 1) throw InvalidInput("lower_bound requires t >= 1");
  return Rational::make(3 * t - 2, 2);
}

std::int64_t upper_bound(int z) {
  ConstructionParams::make(z);
  return (std::int64_t{1} << (z + 1)) - 2;
}

Rational upper_bound_for_t(std::int64_t t) {
  if (t < 1) throw InvalidInput("upper_bound_for_t requires t >= 1");
  return Rational::make(8 * t - 2, 5);
}

Lemma1Report check_lemma1(int z, const AdversaryOptions& options) {
  const auto upper = ConstructionParams::make(z + 1);
  if (upper.ranks() > kExhaustiveRankLimit && !options.force_exhaustive) {
    throw SizeRefusal("check_lemma1: level z + 1 = " + std::to_string(z + 1) +
                      " has 4t = " + std::to_string(upper.ranks()) +
                      ", beyond the exact-adversary envelope");
  }
  Lemma1Report report;
  report.z = z;
  report.d_z = worst_case(construct_for_z(z), options).worst_case;
  report.d_z_plus_1 = worst_case(construct_for_z(z + 1), options).worst_case;
  report.holds = report.d_z_plus_1 <= 2 * report.d_z + 2;
  return report;
}

}  // namespace resil
