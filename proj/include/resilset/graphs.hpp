#pragma once

// Auxiliary graphs over companion pairs for a swap set I:
//
//   G_swp  undirected multigraph, one edge per swap in I joining the pairs
//          holding its two ranks (self-loops allowed).
//   G_pot  directed multigraph over the same nodes plus a virtual node v0.
//          An arc (u, w) marks a swap (i, i+1) outside I that would push pair
//          u's discrepancy further out; w is the pair holding the other rank.
//          The boundary swaps (0,1) and (4t,4t+1) produce arcs into v0.
//
// Node ids are 1..t for pairs and 0 for v0. The checkers below never throw on
// a failed inequality; they report.

#include <cstdint>
#include <string>
#include <vector>

#include "resilset/core.hpp"

namespace resil {

// Which sets the membership tests of the arc rules look at. `original` is the
// literal reading; `primed` is a sensitivity variant.
enum class Membership { original, primed };

struct SwpEdge {
  int u = 0;
  int v = 0;
  Rank low = 0;
  friend bool operator==(const SwpEdge&, const SwpEdge&) = default;
};

struct SwpGraph {
  int t = 0;
  std::vector<SwpEdge> edges;
  // Sorted node lists, ordered by smallest node.
  std::vector<std::vector<int>> components;

  std::size_t component_edge_count(const std::vector<int>& component) const;
  friend bool operator==(const SwpGraph&, const SwpGraph&) = default;
};

enum class ArcRule : std::int8_t {
  cond1 = 1,
  cond2,
  cond3,
  cond4,
  cond5,
  cond6,
  boundary1,
  boundary2,
};

struct PotArc {
  int tail = 0;
  int head = 0;  // 0 is v0
  Rank low = 0;  // the swap (low, low+1); low = 0 or 4t for boundary arcs
  ArcRule rule = ArcRule::cond1;
  friend bool operator==(const PotArc&, const PotArc&) = default;
};

struct PotGraph {
  int t = 0;
  std::vector<PotArc> arcs;
  friend bool operator==(const PotGraph&, const PotGraph&) = default;
};

SwpGraph build_swp(const DefiningSet& ds, const SwapSet& swaps);
PotGraph build_pot(const DefiningSet& ds, const SwapSet& swaps,
                   Membership membership = Membership::original);
// Connected components of the edge multiset over nodes 1..t.
std::vector<std::vector<int>> components_of(int t,
                                            const std::vector<SwpEdge>& edges);

// Node degrees exclude self-loop arcs; arcs to or from v0 count.
int pot_in_degree(const PotGraph& g, int node);
int pot_out_degree(const PotGraph& g, int node);
// Arcs crossing into / out of a node subset (which may contain 0).
int arcs_into(const PotGraph& g, const std::vector<int>& subset);
int arcs_out_of(const PotGraph& g, const std::vector<int>& subset);
// Edges of G_swp with at least one endpoint in the subset.
int incident_edges(const SwpGraph& g, const std::vector<int>& subset);

struct DegreeTable {
  // Indexed by node id 0..t.
  std::vector<int> in;
  std::vector<int> out;
  std::vector<int> swp_degree;  // incident edges; a self-loop counts once
};

DegreeTable degree_table(const SwpGraph& swp, const PotGraph& pot);

struct ComponentCheck {
  std::vector<int> nodes;
  int vertices = 0;
  int edges = 0;
  int in = 0;
  int out = 0;
  int bound = 0;  // |V| + 4(|E| − |V|)
  bool holds = false;
};

struct Lemma2Report {
  std::vector<ComponentCheck> components;
  bool components_hold = false;
  // 2|E| ≥ 3|V|/2 − 1, checked as 4|E| ≥ 3|V| − 2.
  int total_edges = 0;
  int total_vertices = 0;
  bool eq10_holds = false;
  // in(V_swp) − out(V_swp) ≥ −2.
  int slack = 0;
  bool slack_holds = false;
  bool holds() const { return components_hold && eq10_holds && slack_holds; }
};

Lemma2Report verify_lemma2(const DefiningSet& ds, const SwapSet& star,
                           Membership membership = Membership::original);

enum class SubsetFamily { components, singletons, all_small };

inline constexpr int kAllSubsetsLimit = 6;

struct SubsetCheck {
  std::vector<int> nodes;
  int in = 0;
  int incident = 0;
  bool holds = false;
};

struct Prop1Report {
  std::vector<SubsetCheck> subsets;
  bool holds = true;
};

// in(V) ≤ d(V) for each subset of the requested families. all_small throws
// SizeRefusal for t > kAllSubsetsLimit.
Prop1Report verify_prop1(const DefiningSet& ds, const SwapSet& star,
                         std::vector<SubsetFamily> families,
                         Membership membership = Membership::original);

struct NodeTypeCheck {
  int node = 0;
  PairKind kind = PairKind::type1;
  int swp_degree = 0;
  int out_degree = 0;
  int expected = 0;  // Type index + 2
  bool acyclic_component = false;
  bool in_regime = false;  // acyclic component and Type 1 or 2
  bool holds = true;
};

struct Prop2Report {
  std::vector<NodeTypeCheck> nodes;
  // Every in-regime node has d + d_out = type + 2 and no Type 3 pair sits in
  // an acyclic component.
  bool holds = true;
};

Prop2Report verify_prop2(const DefiningSet& ds, const SwapSet& star,
                         Membership membership = Membership::original);

std::string rule_label(ArcRule rule);  // "1".."6", "b1", "b2"
ArcRule parse_rule_label(const std::string& label);

}  // namespace resil
