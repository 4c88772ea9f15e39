#include "resilset/documents.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

namespace resil {

using json = nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!obj.is_object()) throw InvalidInput(where + ": expected a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.contains(key)) {
      throw InvalidInput(where + ": unknown field '" + key + "'");
    }
  }
  for (const char* key : allowed) {
    if (!obj.contains(key)) {
      throw InvalidInput(where + ": missing field '" + key + "'");
    }
  }
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InvalidInput(where + ": expected integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() ||
      x > std::numeric_limits<int>::max()) {
    throw InvalidInput(where + ": integer out of range");
  }
  return static_cast<int>(x);
}

std::array<Rank, 2> as_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    throw InvalidInput(where + ": expected a 2-element array");
  }
  return {as_int(v[0], where), as_int(v[1], where)};
}

json swap_json(Rank low) { return json::array({low, low + 1}); }

}  // namespace

json defining_set_to_json(const DefiningSet& ds) {
  json pairs = json::array();
  for (const auto& cp : ds.pairs) {
    pairs.push_back({{"odd", {cp.odd[0], cp.odd[1]}},
                     {"even", {cp.even[0], cp.even[1]}}});
  }
  return {{"t", ds.t}, {"pairs", pairs}};
}

DefiningSet defining_set_from_json(const json& doc) {
  require_keys(doc, {"t", "pairs"}, "defining set");
  DefiningSet ds;
  ds.t = as_int(doc.at("t"), "defining set.t");
  const auto& pairs = doc.at("pairs");
  if (!pairs.is_array()) throw InvalidInput("defining set.pairs: expected array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "defining set.pairs[" + std::to_string(i) + "]";
    require_keys(pairs[i], {"odd", "even"}, where);
    ds.pairs.emplace_back(as_pair(pairs[i].at("odd"), where + ".odd"),
                          as_pair(pairs[i].at("even"), where + ".even"));
  }
  return ds;
}

SwapSet swap_set_from_text(const std::string& text, int t) {
  if (std::all_of(text.begin(), text.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    return SwapSet{};
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("swap set: ") + e.what());
  }
  if (doc.is_object()) {
    require_keys(doc, {"swaps"}, "swap set");
    doc = doc.at("swaps");
  }
  if (!doc.is_array()) throw InvalidInput("swap set: expected an array");
  std::vector<Swap> swaps;
  for (const auto& entry : doc) {
    const auto p = as_pair(entry, "swap set entry");
    if (p[1] != p[0] + 1) {
      throw InvalidInput("swap (" + std::to_string(p[0]) + "," +
                         std::to_string(p[1]) + ") is not adjacent");
    }
    swaps.push_back(Swap{p[0]});
  }
  return SwapSet::make(t, swaps);
}

json swap_set_to_json(const SwapSet& swaps) {
  json out = json::array();
  for (const auto& s : swaps) out.push_back(swap_json(s.low));
  return out;
}

std::string digest(const DefiningSet& ds) {
  const std::string bytes = defining_set_to_json(ds).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << int{md[i]};
  return os.str();
}

std::string export_dot(const SwpGraph& swp, const PotGraph& pot) {
  std::ostringstream os;
  os << "graph G_swp {\n";
  for (int v = 1; v <= swp.t; ++v) os << "  v" << v << ";\n";
  for (const auto& e : swp.edges) {
    os << "  v" << e.u << " -- v" << e.v << " [label=\"(" << e.low << ","
       << e.low + 1 << ")\"];\n";
  }
  os << "}\n";
  os << "digraph G_pot {\n";
  os << "  v0 [shape=doublecircle, style=dashed];\n";
  for (int v = 1; v <= pot.t; ++v) os << "  v" << v << ";\n";
  for (const auto& a : pot.arcs) {
    os << "  v" << a.tail << " -> v" << a.head << " [label=\"swap=(" << a.low
       << "," << a.low + 1 << ");cond=" << rule_label(a.rule) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json graphs_to_json(const SwpGraph& swp, const PotGraph& pot) {
  json edges = json::array();
  for (const auto& e : swp.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"swap", swap_json(e.low)}});
  }
  json arcs = json::array();
  for (const auto& a : pot.arcs) {
    arcs.push_back({{"tail", a.tail},
                    {"head", a.head},
                    {"swap", swap_json(a.low)},
                    {"cond", rule_label(a.rule)}});
  }
  return {{"t", swp.t},
          {"swp", {{"edges", edges}, {"components", swp.components}}},
          {"pot", {{"arcs", arcs}}}};
}

GraphPair graphs_from_json(const json& doc) {
  require_keys(doc, {"t", "swp", "pot"}, "graphs");
  GraphPair g;
  g.swp.t = g.pot.t = as_int(doc.at("t"), "graphs.t");
  const auto& swp = doc.at("swp");
  require_keys(swp, {"edges", "components"}, "graphs.swp");
  for (const auto& e : swp.at("edges")) {
    require_keys(e, {"u", "v", "swap"}, "graphs.swp.edges[]");
    g.swp.edges.push_back({as_int(e.at("u"), "edge.u"),
                           as_int(e.at("v"), "edge.v"),
                           as_pair(e.at("swap"), "edge.swap")[0]});
  }
  for (const auto& c : swp.at("components")) {
    std::vector<int> nodes;
    for (const auto& v : c) nodes.push_back(as_int(v, "component node"));
    g.swp.components.push_back(std::move(nodes));
  }
  const auto& pot = doc.at("pot");
  require_keys(pot, {"arcs"}, "graphs.pot");
  for (const auto& a : pot.at("arcs")) {
    require_keys(a, {"tail", "head", "swap", "cond"}, "graphs.pot.arcs[]");
    if (!a.at("cond").is_string()) throw InvalidInput("arc.cond: expected string");
    g.pot.arcs.push_back({as_int(a.at("tail"), "arc.tail"),
                          as_int(a.at("head"), "arc.head"),
                          as_pair(a.at("swap"), "arc.swap")[0],
                          parse_rule_label(a.at("cond").get<std::string>())});
  }
  return g;
}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw InvalidInput("unknown graph format '" + name + "' (expected dot|json)");
}

std::string export_graphs(const SwpGraph& swp, const PotGraph& pot,
                          GraphFormat format) {
  if (format == GraphFormat::dot) return export_dot(swp, pot);
  return graphs_to_json(swp, pot).dump(2) + "\n";
}

bool Certificate::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second.holds; });
}

json adversary_to_json(const AdversaryResult& result) {
  return {{"worst_case", result.worst_case},
          {"minimal_maximizer", swap_set_to_json(result.minimal_maximizer)},
          {"maximizer_count", result.maximizer_count},
          {"enumerated", result.enumerated}};
}

json Certificate::to_json() const {
  json doc = adversary ? adversary_to_json(*adversary)
                       : json{{"worst_case", nullptr},
                              {"minimal_maximizer", nullptr},
                              {"maximizer_count", nullptr},
                              {"enumerated", nullptr}};
  doc["input_digest"] = input_digest;
  doc["t"] = t;
  doc["bounds"] = {{"lower", lower_bound},
                   {"upper", upper_bound ? json(*upper_bound) : json(nullptr)}};
  json cs = json::object();
  for (const auto& [name, outcome] : checks) {
    cs[name] = {{"holds", outcome.holds}, {"details", outcome.details}};
  }
  doc["checks"] = cs;
  doc["tool_version"] = kToolVersion;
  return doc;
}

}  // namespace resil
