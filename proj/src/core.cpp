#include "resilset/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace resil {

namespace {

std::array<Rank, 2> sorted2(std::array<Rank, 2> s) {
  if (s[1] < s[0]) std::swap(s[0], s[1]);
  return s;
}

}  // namespace

CompanionPair::CompanionPair(std::array<Rank, 2> odd_set,
                             std::array<Rank, 2> even_set)
    : odd(sorted2(odd_set)), even(sorted2(even_set)) {}

bool CompanionPair::contains(Rank r) const { return side_of(r).has_value(); }

std::optional<Side> CompanionPair::side_of(Rank r) const {
  if (odd[0] == r || odd[1] == r) return Side::odd;
  if (even[0] == r || even[1] == r) return Side::even;
  return std::nullopt;
}

std::array<Rank, 4> CompanionPair::sorted() const {
  std::array<Rank, 4> v{odd[0], odd[1], even[0], even[1]};
  std::sort(v.begin(), v.end());
  return v;
}

SwapSet SwapSet::make(int t, std::span<const Swap> swaps) {
  std::vector<Swap> v(swaps.begin(), swaps.end());
  std::sort(v.begin(), v.end());
  const Rank n = 4 * t;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].low < 1 || v[k].high() > n) {
      throw InvalidInput("swap (" + std::to_string(v[k].low) + "," +
                         std::to_string(v[k].high()) + ") outside [1," +
                         std::to_string(n) + "]");
    }
    if (k > 0 && v[k].low <= v[k - 1].high()) {
      throw InvalidInput("swaps (" + std::to_string(v[k - 1].low) + "," +
                         std::to_string(v[k - 1].high()) + ") and (" +
                         std::to_string(v[k].low) + "," +
                         std::to_string(v[k].high()) + ") are not disjoint");
    }
  }
  return SwapSet(std::move(v));
}

SwapSet SwapSet::make(int t, std::initializer_list<Rank> lows) {
  std::vector<Swap> v;
  v.reserve(lows.size());
  for (Rank r : lows) v.push_back(Swap{r});
  return make(t, v);
}

SwapSet SwapSet::from_sorted_unchecked(std::vector<Swap> swaps) {
  return SwapSet(std::move(swaps));
}

bool SwapSet::contains(Rank low) const {
  return std::binary_search(swaps_.begin(), swaps_.end(), Swap{low});
}

ValidationReport validate_defining_set(const DefiningSet& ds) {
  ValidationReport report;
  auto add = [&](int idx, std::string constraint, std::string msg) {
    report.violations.push_back({idx, std::move(constraint), std::move(msg)});
  };
  if (ds.t < 1) {
    add(0, "t", "t must be positive, got " + std::to_string(ds.t));
    return report;
  }
  if (static_cast<int>(ds.pairs.size()) != ds.t) {
    add(0, "cardinality",
        "expected " + std::to_string(ds.t) + " pairs, got " +
            std::to_string(ds.pairs.size()));
  }
  const Rank n = ds.max_rank();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    const int idx = static_cast<int>(i) + 1;
    const auto& cp = ds.pairs[i];
    for (Rank r : {cp.odd[0], cp.odd[1], cp.even[0], cp.even[1]}) {
      if (r < 1 || r > n) {
        add(idx, "range",
            "rank " + std::to_string(r) + " outside [1," + std::to_string(n) +
                "]");
      } else {
        ++seen[static_cast<std::size_t>(r)];
      }
    }
    auto s = cp.sorted();
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      add(idx, "distinct", "pair " + std::to_string(idx) +
                               " does not hold four distinct ranks");
    }
    if (!cp.balanced()) {
      add(idx, "balance",
          "pair " + std::to_string(idx) + " unbalanced (" +
              std::to_string(cp.odd_sum()) + " != " +
              std::to_string(cp.even_sum()) + ")");
    }
  }
  for (Rank r = 1; r <= n; ++r) {
    const int c = seen[static_cast<std::size_t>(r)];
    if (c == 0) {
      add(0, "partition", "rank " + std::to_string(r) + " missing");
    } else if (c > 1) {
      add(0, "partition", "rank " + std::to_string(r) + " repeated");
    }
  }
  return report;
}

bool is_partition(const DefiningSet& ds) {
  for (const auto& v : validate_defining_set(ds).violations) {
    if (v.constraint != "balance") return false;
  }
  return true;
}

RankIndex::RankIndex(const DefiningSet& ds)
    : t_(ds.t),
      pair_(static_cast<std::size_t>(4 * ds.t) + 2, -1),
      side_(static_cast<std::size_t>(4 * ds.t) + 2, Side::odd) {
  if (!is_partition(ds)) {
    throw InvalidInput("ranks do not partition [1," +
                       std::to_string(ds.max_rank()) + "]");
  }
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    const auto& cp = ds.pairs[i];
    for (Rank r : cp.odd) {
      pair_[static_cast<std::size_t>(r)] = static_cast<int>(i);
      side_[static_cast<std::size_t>(r)] = Side::odd;
    }
    for (Rank r : cp.even) {
      pair_[static_cast<std::size_t>(r)] = static_cast<int>(i);
      side_[static_cast<std::size_t>(r)] = Side::even;
    }
  }
}

namespace {

void check_swaps_fit(const DefiningSet& ds, const SwapSet& swaps) {
  // Re-validate: a SwapSet built for a different t may be out of range here.
  SwapSet::make(ds.t, swaps.swaps());
}

Rank relabel(Rank r, const SwapSet& swaps) {
  if (swaps.contains(r)) return r + 1;
  if (swaps.contains(r - 1)) return r - 1;
  return r;
}

}  // namespace

DefiningSet apply_swaps(const DefiningSet& ds, const SwapSet& swaps) {
  if (!is_partition(ds)) {
    throw InvalidInput("ranks do not partition [1," +
                       std::to_string(ds.max_rank()) + "]");
  }
  check_swaps_fit(ds, swaps);
  DefiningSet out{ds.t, {}};
  out.pairs.reserve(ds.pairs.size());
  for (const auto& cp : ds.pairs) {
    out.pairs.emplace_back(
        std::array<Rank, 2>{relabel(cp.odd[0], swaps), relabel(cp.odd[1], swaps)},
        std::array<Rank, 2>{relabel(cp.even[0], swaps),
                            relabel(cp.even[1], swaps)});
  }
  return out;
}

std::vector<std::int64_t> primed_differences(const DefiningSet& ds,
                                             const SwapSet& swaps) {
  const auto primed = apply_swaps(ds, swaps);
  std::vector<std::int64_t> diffs;
  diffs.reserve(primed.pairs.size());
  for (const auto& cp : primed.pairs) diffs.push_back(cp.difference());
  return diffs;
}

std::int64_t discrepancy(const DefiningSet& ds, const SwapSet& swaps) {
  std::int64_t total = 0;
  for (auto d : primed_differences(ds, swaps)) total += std::llabs(d);
  return total;
}

PairType classify_pair(const CompanionPair& cp) {
  if (!cp.balanced()) {
    throw InvalidInput("classify_pair: pair " + to_string(cp) +
                       " is unbalanced");
  }
  const auto l = cp.sorted();
  if (l[0] == l[1] || l[1] == l[2] || l[2] == l[3]) {
    throw InvalidInput("classify_pair: ranks of " + to_string(cp) +
                       " are not distinct");
  }
  const Rank a = l[0];
  const Rank gap12 = l[1] - l[0];
  const Rank gap23 = l[2] - l[1];
  if (gap12 == 1) return {PairKind::type3, a, gap23, 0};
  if (gap23 == 1) return {PairKind::type1, a, gap12, 0};
  return {PairKind::type2, a, gap12, gap23};
}

int swap_effect(const CompanionPair& cp, Rank low) {
  // The rank `low` moves up by one, `low + 1` moves down by one.
  int effect = 0;
  if (auto s = cp.side_of(low)) effect += static_cast<int>(*s);
  if (auto s = cp.side_of(low + 1)) effect -= static_cast<int>(*s);
  return effect;
}

SwapGroups swap_groups(const CompanionPair& cp, int t) {
  const PairType type = classify_pair(cp);
  const Rank a = type.a;
  const Rank b = type.b;
  const Rank c = type.c;
  std::vector<Rank> lows_a;
  std::vector<Rank> lows_b;
  switch (type.kind) {
    case PairKind::type1:
      lows_a = {a - 1, a + b + 1, a + 2 * b};
      lows_b = {a, a + b - 1, a + 2 * b + 1};
      break;
    case PairKind::type2:
      lows_a = {a - 1, a + b, a + b + c, a + 2 * b + c - 1};
      lows_b = {a, a + b - 1, a + b + c - 1, a + 2 * b + c};
      break;
    case PairKind::type3:
      throw InvalidInput("swap_groups: Type 3 pair " + to_string(cp) +
                         " has no swap groups");
  }
  const Rank n = 4 * t;
  auto build = [n](const std::vector<Rank>& lows) {
    std::vector<CandidateSwap> out;
    for (Rank low : lows) {
      out.push_back({low, low < 1 || low + 1 > n, false});
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (i != j && std::abs(out[i].low - out[j].low) <= 1) {
          out[i].overlaps = true;
        }
      }
    }
    return out;
  };
  SwapGroups g{build(lows_a), build(lows_b), 0};
  // The outer swap (a−1, a) lowers ℓ1; its sign depends on which set holds ℓ1.
  g.sign_a = -static_cast<int>(*cp.side_of(a));
  return g;
}

DefiningSet canonical_form(const DefiningSet& ds) {
  DefiningSet out{ds.t, {}};
  out.pairs.reserve(ds.pairs.size());
  for (const auto& cp : ds.pairs) {
    const Rank m = cp.min();
    if (cp.odd[0] == m || cp.odd[1] == m) {
      out.pairs.push_back(cp);
    } else {
      out.pairs.emplace_back(cp.even, cp.odd);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const CompanionPair& x, const CompanionPair& y) {
              return x.min() < y.min();
            });
  return out;
}

DefiningSet reflect(const DefiningSet& ds) {
  const Rank m = 4 * ds.t + 1;
  DefiningSet out{ds.t, {}};
  out.pairs.reserve(ds.pairs.size());
  for (const auto& cp : ds.pairs) {
    out.pairs.emplace_back(std::array<Rank, 2>{m - cp.odd[0], m - cp.odd[1]},
                           std::array<Rank, 2>{m - cp.even[0], m - cp.even[1]});
  }
  return out;
}

SwapSet reflect(const SwapSet& swaps, int t) {
  std::vector<Swap> v;
  v.reserve(swaps.size());
  for (const auto& s : swaps) v.push_back(Swap{4 * t - s.low});
  return SwapSet::make(t, v);
}

std::string to_string(const CompanionPair& cp) {
  std::ostringstream os;
  os << "({" << cp.odd[0] << "," << cp.odd[1] << "},{" << cp.even[0] << ","
     << cp.even[1] << "})";
  return os.str();
}

std::string to_string(const DefiningSet& ds) {
  std::string s;
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ds.pairs[i]);
  }
  return s;
}

std::string to_string(const SwapSet& swaps) {
  std::string s = "{";
  bool first = true;
  for (const auto& sw : swaps) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(sw.low) + "," + std::to_string(sw.high()) + ")";
  }
  return s + "}";
}

std::string to_string(PairKind kind) {
  switch (kind) {
    case PairKind::type1:
      return "Type1";
    case PairKind::type2:
      return "Type2";
    case PairKind::type3:
      return "Type3";
  }
  return "?";
}

}  // namespace resil
