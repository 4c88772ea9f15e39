#include "resilset/optsearch.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <thread>

#include "resilset/adversary.hpp"

namespace resil {

void enumerate_balanced(int t,
                        const std::function<void(const DefiningSet&)>& visit) {
  if (t < 1) throw InvalidInput("enumerate_balanced requires t >= 1");
  const Rank n = 4 * t;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  DefiningSet ds{t, {}};
  ds.pairs.reserve(static_cast<std::size_t>(t));
  auto is_used = [&](Rank r) { return used[static_cast<std::size_t>(r)] != 0; };
  auto mark = [&](Rank r, char v) { used[static_cast<std::size_t>(r)] = v; };

  std::function<void(Rank)> rec = [&](Rank from) {
    if (static_cast<int>(ds.pairs.size()) == t) {
      visit(ds);
      return;
    }
    Rank l1 = from;
    while (is_used(l1)) ++l1;
    mark(l1, 1);
    for (Rank l2 = l1 + 1; l2 <= n; ++l2) {
      if (is_used(l2)) continue;
      mark(l2, 1);
      for (Rank l3 = l2 + 1; l3 <= n; ++l3) {
        const Rank l4 = l2 + l3 - l1;
        if (l4 > n) break;
        if (is_used(l3) || is_used(l4)) continue;
        mark(l3, 1);
        mark(l4, 1);
        ds.pairs.emplace_back(std::array<Rank, 2>{l1, l4},
                              std::array<Rank, 2>{l2, l3});
        rec(l1 + 1);
        ds.pairs.pop_back();
        mark(l3, 0);
        mark(l4, 0);
      }
      mark(l2, 0);
    }
    mark(l1, 0);
  };
  rec(1);
}

std::vector<DefiningSet> all_balanced(int t) {
  std::vector<DefiningSet> out;
  enumerate_balanced(t, [&](const DefiningSet& ds) { out.push_back(ds); });
  return out;
}

DefiningSet sample_balanced(int t, std::mt19937_64& rng) {
  if (t < 1) throw InvalidInput("sample_balanced requires t >= 1");
  const Rank n = 4 * t;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto is_used = [&](Rank r) { return used[static_cast<std::size_t>(r)] != 0; };
  auto mark = [&](Rank r, char v) { used[static_cast<std::size_t>(r)] = v; };
  DefiningSet ds{t, {}};

  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(ds.pairs.size()) == t) return true;
    Rank l1 = 1;
    while (is_used(l1)) ++l1;
    std::vector<std::array<Rank, 3>> options;
    for (Rank l2 = l1 + 1; l2 <= n; ++l2) {
      if (is_used(l2)) continue;
      for (Rank l3 = l2 + 1; l3 <= n; ++l3) {
        const Rank l4 = l2 + l3 - l1;
        if (l4 > n) break;
        if (!is_used(l3) && !is_used(l4)) options.push_back({l2, l3, l4});
      }
    }
    std::shuffle(options.begin(), options.end(), rng);
    for (const auto& [l2, l3, l4] : options) {
      for (Rank r : {l1, l2, l3, l4}) mark(r, 1);
      ds.pairs.emplace_back(std::array<Rank, 2>{l1, l4},
                            std::array<Rank, 2>{l2, l3});
      if (rec()) return true;
      ds.pairs.pop_back();
      for (Rank r : {l1, l2, l3, l4}) mark(r, 0);
    }
    return false;
  };
  rec();
  std::bernoulli_distribution flip(0.5);
  for (auto& cp : ds.pairs) {
    if (flip(rng)) std::swap(cp.odd, cp.even);
  }
  std::shuffle(ds.pairs.begin(), ds.pairs.end(), rng);
  return ds;
}

namespace {

constexpr std::int64_t kUnset = -1;

std::size_t count_reflection_orbits(const std::vector<DefiningSet>& optima) {
  std::set<std::vector<Rank>> orbits;
  auto key = [](const DefiningSet& ds) {
    std::vector<Rank> k;
    for (const auto& cp : ds.pairs) {
      k.insert(k.end(), {cp.odd[0], cp.odd[1], cp.even[0], cp.even[1]});
    }
    return k;
  };
  for (const auto& ds : optima) {
    orbits.insert(std::min(key(ds), key(canonical_form(reflect(ds)))));
  }
  return orbits.size();
}

}  // namespace

SearchResult find_optimal(int t, const SearchOptions& options) {
  if (t < 1) throw InvalidInput("find_optimal requires t >= 1");
  if (t > kSearchLimit && !options.force) {
    throw SizeRefusal("full search refused for t = " + std::to_string(t) +
                      " > " + std::to_string(kSearchLimit) +
                      " (override to force)");
  }
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (options.time_budget) deadline = start + *options.time_budget;

  const auto candidates = all_balanced(t);
  std::vector<std::int64_t> value(candidates.size(), kUnset);
  std::vector<char> evaluated(candidates.size(), 0);
  std::atomic<std::int64_t> incumbent{std::numeric_limits<std::int64_t>::max()};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};

  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < candidates.size();) {
      if (out_of_time.load(std::memory_order_relaxed)) return;
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        out_of_time.store(true);
        return;
      }
      AdversaryOptions adv;
      adv.strategy = Strategy::branch_and_bound;
      adv.deadline = deadline;
      const auto inc = incumbent.load();
      if (inc != std::numeric_limits<std::int64_t>::max()) {
        adv.abandon_above = inc;
      }
      const auto r = worst_case(candidates[k], adv);
      if (!r.complete) {
        out_of_time.store(true);
        return;
      }
      evaluated[k] = 1;
      if (r.abandoned) continue;
      value[k] = r.worst_case;
      auto cur = incumbent.load();
      while (r.worst_case < cur &&
             !incumbent.compare_exchange_weak(cur, r.worst_case)) {
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SearchResult result;
  result.t = t;
  result.d_star = kUnset;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (evaluated[k]) ++result.candidates_examined;
    if (value[k] != kUnset &&
        (result.d_star == kUnset || value[k] < result.d_star)) {
      result.d_star = value[k];
    }
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (value[k] != kUnset && value[k] == result.d_star) {
      result.optima.push_back(candidates[k]);
    }
  }
  result.optima_up_to_reflection = count_reflection_orbits(result.optima);
  result.certified = result.candidates_examined == candidates.size();
  result.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace resil
