#include "resilset/adversary.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace resil {

namespace {

// A subtree of the decision tree: swaps already fixed on positions < next.
struct Task {
  std::vector<Swap> prefix;
  Rank next = 1;
};

struct TaskResult {
  std::int64_t best = -1;
  std::vector<Swap> best_set;
  std::uint64_t count = 0;
  std::uint64_t enumerated = 0;
  bool abandoned = false;
  bool complete = true;
  std::vector<SwapSet> maximizers;
};

class Searcher {
 public:
  Searcher(const RankIndex& index, const AdversaryOptions& options,
           std::atomic<bool>& stop)
      : n_(4 * index.t()),
        options_(options),
        prune_(options.strategy == Strategy::branch_and_bound),
        stop_(stop),
        pair_(static_cast<std::size_t>(n_) + 1),
        side_(static_cast<std::size_t>(n_) + 1),
        diff_(static_cast<std::size_t>(index.t()), 0) {
    for (Rank r = 1; r <= n_; ++r) {
      pair_[static_cast<std::size_t>(r)] = index.pair_of(r);
      side_[static_cast<std::size_t>(r)] = static_cast<int>(index.side_of(r));
    }
  }

  TaskResult run(const Task& task) {
    result_ = TaskResult{};
    for (const auto& s : task.prefix) place(s.low);
    descend(task.next);
    for (auto it = task.prefix.rbegin(); it != task.prefix.rend(); ++it) {
      unplace(it->low);
    }
    return std::move(result_);
  }

 private:
  void bump(int pair, int delta) {
    auto& d = diff_[static_cast<std::size_t>(pair)];
    total_ -= std::llabs(d);
    d += delta;
    total_ += std::llabs(d);
  }

  void place(Rank p) {
    const auto lo = static_cast<std::size_t>(p);
    bump(pair_[lo], side_[lo]);
    bump(pair_[lo + 1], -side_[lo + 1]);
    placed_.push_back(Swap{p});
  }

  void unplace(Rank p) {
    const auto lo = static_cast<std::size_t>(p);
    bump(pair_[lo + 1], side_[lo + 1]);
    bump(pair_[lo], -side_[lo]);
    placed_.pop_back();
  }

  void descend(Rank p) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (p >= n_) {
      leaf();
      return;
    }
    if (prune_) {
      // Each further swap changes the total by at most 2.
      const std::int64_t bound = total_ + 2 * ((n_ - p + 1) / 2);
      if (bound < result_.best) return;
    }
    place(p);
    descend(p + 2);
    unplace(p);
    descend(p + 1);
  }

  void leaf() {
    ++result_.enumerated;
    if (options_.deadline && (result_.enumerated & 0xFFFF) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      result_.complete = false;
      stop_.store(true, std::memory_order_relaxed);
      return;
    }
    const std::int64_t v = total_;
    if (v > result_.best) {
      result_.best = v;
      result_.best_set = placed_;
      result_.count = 1;
      result_.maximizers.clear();
      record();
      if (options_.abandon_above && v > *options_.abandon_above) {
        result_.abandoned = true;
        stop_.store(true, std::memory_order_relaxed);
      }
    } else if (v == result_.best) {
      ++result_.count;
      if (placed_.size() < result_.best_set.size()) result_.best_set = placed_;
      record();
    }
  }

  void record() {
    if (options_.collect_maximizers &&
        result_.maximizers.size() < options_.maximizer_cap) {
      result_.maximizers.push_back(SwapSet::from_sorted_unchecked(placed_));
    }
  }

  Rank n_;
  const AdversaryOptions& options_;
  bool prune_;
  std::atomic<bool>& stop_;
  std::vector<int> pair_;
  std::vector<int> side_;
  std::vector<std::int64_t> diff_;
  std::int64_t total_ = 0;
  std::vector<Swap> placed_;
  TaskResult result_;
};

// Prefix tasks in enumeration order, fixing every decision below `depth`.
void split(Rank p, Rank depth, Rank n, std::vector<Swap>& prefix,
           std::vector<Task>& out) {
  if (p >= depth || p >= n) {
    out.push_back({prefix, p});
    return;
  }
  prefix.push_back(Swap{p});
  split(p + 2, depth, n, prefix, out);
  prefix.pop_back();
  split(p + 1, depth, n, prefix, out);
}

Rank split_depth(Rank n, unsigned workers) {
  // Enough subtrees for load balance: F(depth + 1) ≥ 64 · workers.
  const std::uint64_t want = 64ull * workers;
  std::uint64_t a = 1, b = 1;
  Rank depth = 1;
  while (b < want && depth < n) {
    const auto c = a + b;
    a = b;
    b = c;
    ++depth;
  }
  return depth;
}

}  // namespace

std::uint64_t count_swap_sets(int t) {
  std::uint64_t a = 1, b = 1;  // F(1), F(2)
  for (int k = 2; k < 4 * t + 1; ++k) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return b;
}

void for_each_swap_set(int t,
                       const std::function<void(const SwapSet&)>& visit) {
  const Rank n = 4 * t;
  std::vector<Swap> placed;
  std::function<void(Rank)> rec = [&](Rank p) {
    if (p >= n) {
      visit(SwapSet::from_sorted_unchecked(placed));
      return;
    }
    placed.push_back(Swap{p});
    rec(p + 2);
    placed.pop_back();
    rec(p + 1);
  };
  rec(1);
}

AdversaryResult worst_case(const DefiningSet& ds,
                           const AdversaryOptions& options) {
  const auto report = validate_defining_set(ds);
  if (!report.ok()) {
    throw InvalidInput("worst_case: " + report.violations.front().message);
  }
  const Rank n = ds.max_rank();
  if (options.strategy == Strategy::exhaustive && n > kExhaustiveRankLimit &&
      !options.force_exhaustive) {
    throw SizeRefusal("exhaustive adversary refused for 4t = " +
                      std::to_string(n) + " > " +
                      std::to_string(kExhaustiveRankLimit) +
                      " (use branch_and_bound or force)");
  }
  const RankIndex index(ds);
  const unsigned workers = std::max(1u, options.workers);

  std::vector<Task> tasks;
  if (workers == 1) {
    tasks.push_back({{}, 1});
  } else {
    std::vector<Swap> prefix;
    split(1, split_depth(n, workers), n, prefix, tasks);
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Searcher searcher(index, options, stop);
    for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
      results[k] = searcher.run(tasks[k]);
    }
  };
  if (workers == 1 || tasks.size() == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    const auto nthreads = std::min<std::size_t>(workers, tasks.size());
    for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(work);
  }

  AdversaryResult out;
  std::int64_t best = -1;
  for (const auto& r : results) best = std::max(best, r.best);
  out.worst_case = best;
  const std::vector<Swap>* chosen = nullptr;
  for (const auto& r : results) {
    out.enumerated += r.enumerated;
    out.abandoned = out.abandoned || r.abandoned;
    out.complete = out.complete && r.complete;
    if (r.best != best) continue;
    out.maximizer_count += r.count;
    if (chosen == nullptr || r.best_set.size() < chosen->size()) {
      chosen = &r.best_set;
    }
    for (const auto& m : r.maximizers) {
      if (out.maximizers.size() < options.maximizer_cap) {
        out.maximizers.push_back(m);
      }
    }
  }
  if (chosen != nullptr) {
    out.minimal_maximizer = SwapSet::from_sorted_unchecked(*chosen);
  }
  // Unfinished tasks may have been skipped entirely.
  if (stop.load() && !out.abandoned) out.complete = false;
  return out;
}

bool minimal_maximizer_property(const DefiningSet& ds,
                                const AdversaryResult& result) {
  const auto& star = result.minimal_maximizer;
  if (result.worst_case != 2 * static_cast<std::int64_t>(star.size())) {
    return false;
  }
  if (discrepancy(ds, star) != result.worst_case) return false;
  for (std::size_t k = 0; k < star.size(); ++k) {
    std::vector<Swap> rest;
    for (std::size_t j = 0; j < star.size(); ++j) {
      if (j != k) rest.push_back(star.swaps()[j]);
    }
    const auto reduced = SwapSet::from_sorted_unchecked(std::move(rest));
    if (discrepancy(ds, reduced) != result.worst_case - 2) return false;
  }
  return true;
}

}  // namespace resil
