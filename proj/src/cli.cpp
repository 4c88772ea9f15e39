#include "resilset/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "resilset/adversary.hpp"
#include "resilset/construct.hpp"
#include "resilset/documents.hpp"
#include "resilset/graphs.hpp"
#include "resilset/optsearch.hpp"

namespace resil::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

DefiningSet load_defining_set(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "': " + e.what());
  }
  return defining_set_from_json(doc);
}

void require_valid(const DefiningSet& ds) {
  const auto report = validate_defining_set(ds);
  if (!report.ok()) throw InvalidInput(report.violations.front().message);
}

Membership parse_membership(const std::string& name) {
  if (name == "literal" || name == "original") return Membership::original;
  if (name == "primed") return Membership::primed;
  throw InvalidInput("unknown membership convention '" + name +
                     "' (expected literal|primed)");
}

struct AdversaryFlags {
  std::string strategy = "auto";
  bool force_exhaustive = false;
  unsigned workers = 1;
  double time_budget = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--strategy", strategy,
                    "auto | exhaustive | bnb (auto: exhaustive when 4t <= 40)")
        ->check(CLI::IsMember({"auto", "exhaustive", "bnb"}));
    cmd->add_flag("--force-exhaustive", force_exhaustive,
                  "Allow exhaustive enumeration beyond 4t = 40");
    cmd->add_option("--workers", workers, "Worker threads")
        ->check(CLI::Range(1u, 1024u));
    cmd->add_option("--time-budget", time_budget,
                    "Seconds before giving up (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
  }

  AdversaryOptions options(const DefiningSet& ds) const {
    AdversaryOptions o;
    if (strategy == "exhaustive" ||
        (strategy == "auto" && ds.max_rank() <= kExhaustiveRankLimit)) {
      o.strategy = Strategy::exhaustive;
    } else {
      o.strategy = Strategy::branch_and_bound;
    }
    o.force_exhaustive = force_exhaustive;
    o.workers = workers;
    if (time_budget > 0) {
      o.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(
                       static_cast<std::int64_t>(time_budget * 1000));
    }
    return o;
  }
};

AdversaryResult run_adversary(const DefiningSet& ds,
                              const AdversaryOptions& options) {
  auto result = worst_case(ds, options);
  if (!result.complete) {
    throw SizeRefusal("time budget expired after " +
                      std::to_string(result.enumerated) +
                      " swap sets; result not certified");
  }
  return result;
}

json search_to_json(const SearchResult& r) {
  json optima = json::array();
  for (const auto& ds : r.optima) optima.push_back(defining_set_to_json(ds));
  return {{"t", r.t},
          {"d_star", r.d_star},
          {"optima", optima},
          {"optima_up_to_reflection", r.optima_up_to_reflection},
          {"candidates_examined", r.candidates_examined},
          {"wall_time_ms", r.wall_time.count()},
          {"certified", r.certified}};
}

json violations_json(const ValidationReport& report) {
  json v = json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"pair", x.pair_index},
                 {"constraint", x.constraint},
                 {"message", x.message}});
  }
  return v;
}

const std::vector<std::string> kAllChecks = {
    "balance", "eq8", "lemma1", "lemma2", "eq10", "prop1", "prop2", "bounds"};
const std::vector<std::string> kDefaultChecks = {
    "balance", "eq8", "lemma2", "eq10", "prop1", "prop2", "bounds"};

struct VerifyFlags {
  std::string sets;
  int z = 0;
  int random_t = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;
  std::string out;
  std::string membership = "literal";
  AdversaryFlags adversary;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  const int sources = (!f.sets.empty()) + (f.z != 0) + (f.random_t != 0);
  if (sources != 1) {
    throw InvalidInput("verify needs exactly one of --sets, --z, --random-t");
  }
  std::vector<std::string> checks = f.checks.empty() ? kDefaultChecks : f.checks;
  for (const auto& c : checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
      throw InvalidInput("unknown check '" + c + "'");
    }
  }
  auto wants = [&](const char* name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  if (wants("lemma1") && f.z == 0) {
    throw InvalidInput("check 'lemma1' applies to constructions; use --z");
  }
  const Membership membership = parse_membership(f.membership);

  DefiningSet ds;
  if (!f.sets.empty()) {
    ds = load_defining_set(f.sets);
  } else if (f.z != 0) {
    ds = construct_for_z(f.z);
  } else {
    if (f.random_t < 1) throw InvalidInput("--random-t must be >= 1");
    std::mt19937_64 rng(f.seed);
    ds = sample_balanced(f.random_t, rng);
  }

  Certificate cert;
  cert.input_digest = digest(ds);
  cert.t = ds.t;
  cert.lower_bound = ds.t >= 1 ? lower_bound(ds.t).to_string() : "";
  if (f.z != 0) cert.upper_bound = upper_bound(f.z);

  const auto validation = validate_defining_set(ds);
  if (wants("balance")) {
    cert.checks["balance"] = {validation.ok(),
                              {{"violations", violations_json(validation)}}};
  }
  if (!validation.ok()) {
    for (const auto& c : checks) {
      if (c != "balance") {
        cert.checks[c] = {false, {{"skipped", "input failed validation"}}};
      }
    }
    write_output(f.out, cert.to_json().dump(2) + "\n", out);
    return kCheckFailed;
  }

  const auto result = run_adversary(ds, f.adversary.options(ds));
  cert.adversary = result;
  const auto& star = result.minimal_maximizer;

  if (wants("eq8")) {
    cert.checks["eq8"] = {minimal_maximizer_property(ds, result),
                          {{"worst_case", result.worst_case},
                           {"maximizer_size", star.size()}}};
  }
  if (wants("lemma1")) {
    const auto l1 = check_lemma1(f.z, f.adversary.options(ds));
    cert.checks["lemma1"] = {l1.holds,
                             {{"z", l1.z},
                              {"d_z", l1.d_z},
                              {"d_z_plus_1", l1.d_z_plus_1},
                              {"bound", 2 * l1.d_z + 2}}};
  }
  if (wants("lemma2") || wants("eq10")) {
    const auto l2 = verify_lemma2(ds, star, membership);
    if (wants("lemma2")) {
      json comps = json::array();
      for (const auto& c : l2.components) {
        comps.push_back({{"nodes", c.nodes},
                         {"vertices", c.vertices},
                         {"edges", c.edges},
                         {"in", c.in},
                         {"out", c.out},
                         {"bound", c.bound},
                         {"holds", c.holds}});
      }
      cert.checks["lemma2"] = {l2.components_hold && l2.slack_holds,
                               {{"components", comps}, {"slack", l2.slack}}};
    }
    if (wants("eq10")) {
      cert.checks["eq10"] = {l2.eq10_holds,
                             {{"edges", l2.total_edges},
                              {"vertices", l2.total_vertices},
                              {"lhs", 2 * l2.total_edges},
                              {"rhs", Rational::make(3 * l2.total_vertices - 2, 2)
                                          .to_string()}}};
    }
  }
  if (wants("prop1")) {
    const auto p1 = verify_prop1(
        ds, star, {SubsetFamily::components, SubsetFamily::singletons},
        membership);
    json failures = json::array();
    for (const auto& s : p1.subsets) {
      if (!s.holds) {
        failures.push_back(
            {{"nodes", s.nodes}, {"in", s.in}, {"d", s.incident}});
      }
    }
    cert.checks["prop1"] = {p1.holds,
                            {{"subsets_checked", p1.subsets.size()},
                             {"failures", failures}}};
  }
  if (wants("prop2")) {
    const auto p2 = verify_prop2(ds, star, membership);
    json nodes = json::array();
    for (const auto& n : p2.nodes) {
      nodes.push_back({{"node", n.node},
                       {"type", to_string(n.kind)},
                       {"d", n.swp_degree},
                       {"d_out", n.out_degree},
                       {"expected", n.expected},
                       {"in_regime", n.in_regime},
                       {"holds", n.holds}});
    }
    cert.checks["prop2"] = {p2.holds, {{"nodes", nodes}}};
  }
  if (wants("bounds")) {
    const auto lower = lower_bound(ds.t);
    const bool lower_ok = Rational{result.worst_case, 1} >= lower;
    const bool upper_ok =
        !cert.upper_bound || result.worst_case <= *cert.upper_bound;
    cert.checks["bounds"] = {lower_ok && upper_ok,
                             {{"lower", lower.to_string()},
                              {"upper", cert.upper_bound
                                            ? json(*cert.upper_bound)
                                            : json(nullptr)},
                              {"worst_case", result.worst_case}}};
  }
  write_output(f.out, cert.to_json().dump(2) + "\n", out);
  return cert.all_hold() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, evaluate, search and certify swap-resilient "
               "balanced defining sets"};
  app.name("resilset");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // construct
  int construct_z = 0;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "Write the level-z construction");
  construct->add_option("--z", construct_z, "Construction level (>= 2)")->required();
  construct->add_option("--out", construct_out, "Output path (default stdout)");

  // eval
  std::string eval_sets, eval_swaps;
  bool eval_worst = false;
  AdversaryFlags eval_adv;
  auto* eval = app.add_subcommand("eval", "Discrepancy under swaps, or the worst case");
  eval->add_option("--sets", eval_sets, "Defining set document")->required();
  auto* swaps_opt = eval->add_option("--swaps", eval_swaps, "Swap set document");
  auto* worst_opt = eval->add_flag("--worst-case", eval_worst, "Compute the exact worst case");
  swaps_opt->excludes(worst_opt);
  eval_adv.attach(eval);

  // search
  int search_t = 0;
  bool search_force = false;
  unsigned search_workers = 1;
  double search_budget = 0;
  auto* search = app.add_subcommand("search", "Exhaustive search for D*(t)");
  search->add_option("--t", search_t, "Number of companion pairs")->required();
  search->add_flag("--force", search_force, "Search beyond t = 6");
  search->add_option("--workers", search_workers, "Worker threads")
      ->check(CLI::Range(1u, 1024u));
  search->add_option("--time-budget", search_budget,
                     "Seconds before returning a partial result (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);

  // verify
  VerifyFlags vf;
  std::string checks_csv;
  auto* verify = app.add_subcommand("verify", "Certify a defining set");
  verify->add_option("--sets", vf.sets, "Defining set document");
  verify->add_option("--z", vf.z, "Use the level-z construction");
  verify->add_option("--random-t", vf.random_t, "Use a random balanced set with this t");
  verify->add_option("--seed", vf.seed, "Seed for --random-t");
  verify->add_option("--checks", checks_csv,
                     "Comma-separated: balance,eq8,lemma1,lemma2,eq10,prop1,prop2,bounds");
  verify->add_option("--out", vf.out, "Certificate path (default stdout)");
  verify->add_option("--membership", vf.membership, "literal | primed");
  vf.adversary.attach(verify);

  // graphs
  std::string g_sets, g_swaps, g_format = "dot", g_out, g_membership = "literal";
  bool g_minimal = false;
  AdversaryFlags g_adv;
  auto* graphs = app.add_subcommand("graphs", "Export the auxiliary graphs");
  graphs->add_option("--sets", g_sets, "Defining set document")->required();
  auto* g_swaps_opt = graphs->add_option("--swaps", g_swaps, "Swap set document");
  auto* g_min_opt = graphs->add_flag("--minimal-maximizer", g_minimal,
                                     "Use the adversary's minimal maximizer");
  g_swaps_opt->excludes(g_min_opt);
  graphs->add_option("--format", g_format, "dot | json");
  graphs->add_option("--out", g_out, "Output path (default stdout)");
  graphs->add_option("--membership", g_membership, "literal | primed");
  g_adv.attach(graphs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInvalidInput;
  }

  try {
    if (construct->parsed()) {
      const auto ds = construct_for_z(construct_z);
      write_output(construct_out, defining_set_to_json(ds).dump(2) + "\n", out);
      return kPass;
    }
    if (eval->parsed()) {
      if (eval_swaps.empty() == !eval_worst) {
        throw InvalidInput("eval needs exactly one of --swaps, --worst-case");
      }
      const auto ds = load_defining_set(eval_sets);
      require_valid(ds);
      if (!eval_swaps.empty()) {
        const auto swaps = swap_set_from_text(read_file(eval_swaps), ds.t);
        out << discrepancy(ds, swaps) << "\n";
        return kPass;
      }
      Certificate cert;
      cert.input_digest = digest(ds);
      cert.t = ds.t;
      cert.adversary = run_adversary(ds, eval_adv.options(ds));
      cert.lower_bound = lower_bound(ds.t).to_string();
      out << cert.to_json().dump(2) << "\n";
      return kPass;
    }
    if (search->parsed()) {
      SearchOptions o;
      o.workers = search_workers;
      o.force = search_force;
      if (search_budget > 0) {
        o.time_budget = std::chrono::milliseconds(
            static_cast<std::int64_t>(search_budget * 1000));
      }
      out << search_to_json(find_optimal(search_t, o)).dump(2) << "\n";
      return kPass;
    }
    if (verify->parsed()) {
      std::stringstream ss(checks_csv);
      for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) vf.checks.push_back(item);
      }
      return cmd_verify(vf, out);
    }
    if (graphs->parsed()) {
      const auto format = parse_graph_format(g_format);
      const auto membership = parse_membership(g_membership);
      const auto ds = load_defining_set(g_sets);
      require_valid(ds);
      SwapSet swaps;
      if (g_minimal) {
        swaps = run_adversary(ds, g_adv.options(ds)).minimal_maximizer;
      } else if (!g_swaps.empty()) {
        swaps = swap_set_from_text(read_file(g_swaps), ds.t);
      } else {
        throw InvalidInput("graphs needs one of --swaps, --minimal-maximizer");
      }
      write_output(g_out,
                   export_graphs(build_swp(ds, swaps),
                                 build_pot(ds, swaps, membership), format),
                   out);
      return kPass;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const SizeRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kSizeRefused;
  }
  return kInvalidInput;
}

}  // namespace resil::cli
