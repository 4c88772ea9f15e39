#pragma once

// JSON interchange documents, DOT rendering, and verification certificates.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "resilset/adversary.hpp"
#include "resilset/core.hpp"
#include "resilset/graphs.hpp"

namespace resil {

inline constexpr const char* kToolVersion = "0.1.0";

// {"t": int, "pairs": [{"odd": [a, b], "even": [c, d]}, ...]}. Parsing is
// strict about shape and unknown fields; it does not check balance.
nlohmann::ordered_json defining_set_to_json(const DefiningSet& ds);
DefiningSet defining_set_from_json(const nlohmann::ordered_json& doc);

// Accepts an empty document, a bare array of [i, i+1] pairs, or
// {"swaps": [...]}.
SwapSet swap_set_from_text(const std::string& text, int t);
nlohmann::ordered_json swap_set_to_json(const SwapSet& swaps);

// SHA-256 of the compact JSON serialization, as "sha256:<hex>".
std::string digest(const DefiningSet& ds);

std::string export_dot(const SwpGraph& swp, const PotGraph& pot);

nlohmann::ordered_json graphs_to_json(const SwpGraph& swp, const PotGraph& pot);
struct GraphPair {
  SwpGraph swp;
  PotGraph pot;
};
GraphPair graphs_from_json(const nlohmann::ordered_json& doc);

enum class GraphFormat { dot, json };
GraphFormat parse_graph_format(const std::string& name);
std::string export_graphs(const SwpGraph& swp, const PotGraph& pot,
                          GraphFormat format);

struct CheckOutcome {
  bool holds = false;
  nlohmann::ordered_json details;
};

struct Certificate {
  std::string input_digest;
  int t = 0;
  // Absent when the input failed validation.
  std::optional<AdversaryResult> adversary;
  std::string lower_bound;  // "p/q"
  std::optional<std::int64_t> upper_bound;
  std::map<std::string, CheckOutcome> checks;

  bool all_hold() const;
  nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json adversary_to_json(const AdversaryResult& result);

}  // namespace resil
