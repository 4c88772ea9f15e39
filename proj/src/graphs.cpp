#include "resilset/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace resil {

namespace {

bool in_subset(const std::vector<char>& mask, int node) {
  return mask[static_cast<std::size_t>(node)] != 0;
}

std::vector<char> subset_mask(int t, const std::vector<int>& subset) {
  std::vector<char> mask(static_cast<std::size_t>(t) + 1, 0);
  for (int v : subset) {
    if (v < 0 || v > t) throw InvalidInput("node id out of range");
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void require_inputs(const DefiningSet& ds, const SwapSet& swaps) {
  const auto report = validate_defining_set(ds);
  if (!report.ok()) {
    throw InvalidInput("graphs: " + report.violations.front().message);
  }
  SwapSet::make(ds.t, swaps.swaps());
}

}  // namespace

std::vector<std::vector<int>> components_of(int t,
                                            const std::vector<SwpEdge>& edges) {
  DisjointSets sets(t + 1);
  for (const auto& e : edges) sets.unite(e.u, e.v);
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(t) + 1);
  for (int v = 1; v <= t; ++v) {
    by_root[static_cast<std::size_t>(sets.find(v))].push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SwpGraph::component_edge_count(
    const std::vector<int>& component) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [&](const SwpEdge& e) {
        return std::binary_search(component.begin(), component.end(), e.u);
      }));
}

SwpGraph build_swp(const DefiningSet& ds, const SwapSet& swaps) {
  require_inputs(ds, swaps);
  const RankIndex index(ds);
  SwpGraph g;
  g.t = ds.t;
  for (const auto& s : swaps) {
    const int u = index.pair_of(s.low) + 1;
    const int v = index.pair_of(s.high()) + 1;
    g.edges.push_back({std::min(u, v), std::max(u, v), s.low});
  }
  g.components = components_of(g.t, g.edges);
  return g;
}

PotGraph build_pot(const DefiningSet& ds, const SwapSet& swaps,
                   Membership membership) {
  require_inputs(ds, swaps);
  const DefiningSet primed = apply_swaps(ds, swaps);
  const RankIndex original_index(ds);
  const RankIndex primed_index(primed);
  const RankIndex& owner = membership == Membership::original ? original_index
                                                              : primed_index;
  std::vector<std::int64_t> diff;
  diff.reserve(primed.pairs.size());
  for (const auto& cp : primed.pairs) diff.push_back(cp.difference());
  auto d = [&](int pair) { return diff[static_cast<std::size_t>(pair)]; };

  PotGraph g;
  g.t = ds.t;
  const Rank n = ds.max_rank();
  for (Rank i = 1; i < n; ++i) {
    if (swaps.contains(i)) continue;
    // Rank i moves up: the pair holding i is the arc's tail.
    {
      const int k = owner.pair_of(i);
      const Side s = owner.side_of(i);
      const bool same_set =
          owner.pair_of(i + 1) == k && owner.side_of(i + 1) == s;
      if (!same_set) {
        const int head = owner.pair_of(i + 1) + 1;
        if (s == Side::even && d(k) < 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond1});
        } else if (s == Side::odd && d(k) > 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond3});
        } else if (s == Side::odd && d(k) == 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond5});
        }
      }
    }
    // Rank i + 1 moves down: the pair holding i + 1 is the arc's tail.
    {
      const int k = owner.pair_of(i + 1);
      const Side s = owner.side_of(i + 1);
      const bool same_set = owner.pair_of(i) == k && owner.side_of(i) == s;
      if (!same_set) {
        const int head = owner.pair_of(i) + 1;
        if (s == Side::even && d(k) > 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond2});
        } else if (s == Side::odd && d(k) < 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond4});
        } else if (s == Side::even && d(k) == 0) {
          g.arcs.push_back({k + 1, head, i, ArcRule::cond6});
        }
      }
    }
  }

  // Boundary swaps: rank 1 drops to 0, rank 4t rises to 4t + 1. The effect is
  // simulated where the rank sits after I; the arc belongs to the pair that
  // holds the rank under the membership convention.
  auto boundary = [&](Rank rank, int direction, Side equal_side, Rank low) {
    const int k = owner.pair_of(rank);
    if (d(k) != 0) {
      if (primed_index.pair_of(rank) != k) return;
      const std::int64_t moved =
          d(k) + direction * static_cast<int>(primed_index.side_of(rank));
      if (std::llabs(moved) > std::llabs(d(k))) {
        g.arcs.push_back({k + 1, 0, low, ArcRule::boundary1});
      }
    } else if (owner.side_of(rank) == equal_side) {
      g.arcs.push_back({k + 1, 0, low, ArcRule::boundary2});
    }
  };
  boundary(1, -1, Side::even, 0);
  boundary(n, +1, Side::odd, n);
  return g;
}

int pot_in_degree(const PotGraph& g, int node) {
  return static_cast<int>(std::count_if(
      g.arcs.begin(), g.arcs.end(),
      [&](const PotArc& a) { return a.head == node && a.tail != node; }));
}

int pot_out_degree(const PotGraph& g, int node) {
  return static_cast<int>(std::count_if(
      g.arcs.begin(), g.arcs.end(),
      [&](const PotArc& a) { return a.tail == node && a.head != node; }));
}

int arcs_into(const PotGraph& g, const std::vector<int>& subset) {
  const auto mask = subset_mask(g.t, subset);
  return static_cast<int>(
      std::count_if(g.arcs.begin(), g.arcs.end(), [&](const PotArc& a) {
        return in_subset(mask, a.head) && !in_subset(mask, a.tail);
      }));
}

int arcs_out_of(const PotGraph& g, const std::vector<int>& subset) {
  const auto mask = subset_mask(g.t, subset);
  return static_cast<int>(
      std::count_if(g.arcs.begin(), g.arcs.end(), [&](const PotArc& a) {
        return in_subset(mask, a.tail) && !in_subset(mask, a.head);
      }));
}

int incident_edges(const SwpGraph& g, const std::vector<int>& subset) {
  const auto mask = subset_mask(g.t, subset);
  return static_cast<int>(
      std::count_if(g.edges.begin(), g.edges.end(), [&](const SwpEdge& e) {
        return in_subset(mask, e.u) || in_subset(mask, e.v);
      }));
}

DegreeTable degree_table(const SwpGraph& swp, const PotGraph& pot) {
  DegreeTable table;
  const auto size = static_cast<std::size_t>(swp.t) + 1;
  table.in.assign(size, 0);
  table.out.assign(size, 0);
  table.swp_degree.assign(size, 0);
  for (const auto& a : pot.arcs) {
    if (a.tail == a.head) continue;
    ++table.out[static_cast<std::size_t>(a.tail)];
    ++table.in[static_cast<std::size_t>(a.head)];
  }
  for (const auto& e : swp.edges) {
    ++table.swp_degree[static_cast<std::size_t>(e.u)];
    if (e.v != e.u) ++table.swp_degree[static_cast<std::size_t>(e.v)];
  }
  return table;
}

Lemma2Report verify_lemma2(const DefiningSet& ds, const SwapSet& star,
                           Membership membership) {
  const auto swp = build_swp(ds, star);
  const auto pot = build_pot(ds, star, membership);
  Lemma2Report report;
  report.components_hold = true;
  for (const auto& comp : swp.components) {
    ComponentCheck c;
    c.nodes = comp;
    c.vertices = static_cast<int>(comp.size());
    c.edges = static_cast<int>(swp.component_edge_count(comp));
    c.in = arcs_into(pot, comp);
    c.out = arcs_out_of(pot, comp);
    c.bound = c.vertices + 4 * (c.edges - c.vertices);
    c.holds = c.in - c.out <= c.bound;
    report.components_hold = report.components_hold && c.holds;
    report.components.push_back(std::move(c));
  }
  report.total_edges = static_cast<int>(swp.edges.size());
  report.total_vertices = ds.t;
  report.eq10_holds = 4 * report.total_edges >= 3 * report.total_vertices - 2;
  std::vector<int> all(static_cast<std::size_t>(ds.t));
  std::iota(all.begin(), all.end(), 1);
  report.slack = arcs_into(pot, all) - arcs_out_of(pot, all);
  report.slack_holds = report.slack >= -2;
  return report;
}

Prop1Report verify_prop1(const DefiningSet& ds, const SwapSet& star,
                         std::vector<SubsetFamily> families,
                         Membership membership) {
  const auto swp = build_swp(ds, star);
  const auto pot = build_pot(ds, star, membership);
  std::vector<std::vector<int>> subsets;
  for (auto family : families) {
    switch (family) {
      case SubsetFamily::components:
        subsets.insert(subsets.end(), swp.components.begin(),
                       swp.components.end());
        break;
      case SubsetFamily::singletons:
        for (int v = 1; v <= ds.t; ++v) subsets.push_back({v});
        break;
      case SubsetFamily::all_small: {
        if (ds.t > kAllSubsetsLimit) {
          throw SizeRefusal("all-subset check refused for t = " +
                            std::to_string(ds.t) + " > " +
                            std::to_string(kAllSubsetsLimit));
        }
        for (unsigned mask = 0; mask < (1u << ds.t); ++mask) {
          std::vector<int> s;
          for (int v = 1; v <= ds.t; ++v) {
            if (mask & (1u << (v - 1))) s.push_back(v);
          }
          subsets.push_back(std::move(s));
        }
        break;
      }
    }
  }
  Prop1Report report;
  for (auto& s : subsets) {
    SubsetCheck c;
    c.in = arcs_into(pot, s);
    c.incident = incident_edges(swp, s);
    c.holds = c.in <= c.incident;
    c.nodes = std::move(s);
    report.holds = report.holds && c.holds;
    report.subsets.push_back(std::move(c));
  }
  return report;
}

Prop2Report verify_prop2(const DefiningSet& ds, const SwapSet& star,
                         Membership membership) {
  const auto swp = build_swp(ds, star);
  const auto pot = build_pot(ds, star, membership);
  const auto table = degree_table(swp, pot);
  std::vector<bool> acyclic(static_cast<std::size_t>(ds.t) + 1, false);
  for (const auto& comp : swp.components) {
    const bool tree = swp.component_edge_count(comp) + 1 == comp.size();
    for (int v : comp) acyclic[static_cast<std::size_t>(v)] = tree;
  }
  Prop2Report report;
  for (int v = 1; v <= ds.t; ++v) {
    const auto idx = static_cast<std::size_t>(v);
    NodeTypeCheck c;
    c.node = v;
    c.kind = classify_pair(ds.pairs[idx - 1]).kind;
    c.swp_degree = table.swp_degree[idx];
    c.out_degree = table.out[idx];
    c.expected = static_cast<int>(c.kind) + 2;
    c.acyclic_component = acyclic[idx];
    c.in_regime = c.acyclic_component && c.kind != PairKind::type3;
    if (c.in_regime) {
      c.holds = c.swp_degree + c.out_degree == c.expected;
    } else {
      c.holds = !(c.acyclic_component && c.kind == PairKind::type3);
    }
    report.holds = report.holds && c.holds;
    report.nodes.push_back(c);
  }
  return report;
}

std::string rule_label(ArcRule rule) {
  switch (rule) {
    case ArcRule::boundary1:
      return "b1";
    case ArcRule::boundary2:
      return "b2";
    default:
      return std::to_string(static_cast<int>(rule));
  }
}

ArcRule parse_rule_label(const std::string& label) {
  if (label == "b1") return ArcRule::boundary1;
  if (label == "b2") return ArcRule::boundary2;
  if (label.size() == 1 && label[0] >= '1' && label[0] <= '6') {
    return static_cast<ArcRule>(label[0] - '0');
  }
  throw InvalidInput("unknown arc rule label '" + label + "'");
}

}  // namespace resil
