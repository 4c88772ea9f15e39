#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "resilset/adversary.hpp"
#include "resilset/cli.hpp"
#include "resilset/construct.hpp"
#include "resilset/documents.hpp"
#include "resilset/graphs.hpp"
#include "resilset/optsearch.hpp"

namespace py = pybind11;
using json = nlohmann::ordered_json;
using namespace resil;

// Documents cross the boundary as JSON text; the Python package parses them.
namespace {

DefiningSet parse_sets(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("defining set: ") + e.what());
  }
  return defining_set_from_json(doc);
}

Membership parse_membership(const std::string& name) {
  if (name == "literal") return Membership::original;
  if (name == "primed") return Membership::primed;
  throw InvalidInput("membership must be literal or primed");
}

std::string worst_case_json(const std::string& sets, const std::string& strategy,
                            unsigned workers, bool collect) {
  const auto ds = parse_sets(sets);
  AdversaryOptions o;
  if (strategy == "exhaustive") {
    o.strategy = Strategy::exhaustive;
  } else if (strategy != "bnb") {
    throw InvalidInput("strategy must be exhaustive or bnb");
  }
  o.workers = workers;
  o.collect_maximizers = collect;
  AdversaryResult r;
  {
    py::gil_scoped_release release;
    r = worst_case(ds, o);
  }
  auto doc = adversary_to_json(r);
  if (collect) {
    json all = json::array();
    for (const auto& s : r.maximizers) all.push_back(swap_set_to_json(s));
    doc["maximizers"] = all;
  }
  return doc.dump();
}

std::string search_json(int t, unsigned workers) {
  SearchResult r;
  {
    py::gil_scoped_release release;
    r = find_optimal(t, {.workers = workers});
  }
  json optima = json::array();
  for (const auto& ds : r.optima) optima.push_back(defining_set_to_json(ds));
  return json{{"t", r.t},
              {"d_star", r.d_star},
              {"optima", optima},
              {"optima_up_to_reflection", r.optima_up_to_reflection},
              {"candidates_examined", r.candidates_examined},
              {"certified", r.certified}}
      .dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> argv{"resilset"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(argv, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_resilset, m) {
  m.doc() = "Native core of the resilset package";

  static py::exception<SizeRefusal> size_refusal(m, "SizeRefusal",
                                                 PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SizeRefusal& e) {
      size_refusal(e.what());
    }
  });

  m.def("construct", [](int z) { return defining_set_to_json(construct_for_z(z)).dump(); },
        py::arg("z"));
  m.def("validate", [](const std::string& sets) {
    const auto report = validate_defining_set(parse_sets(sets));
    json v = json::array();
    for (const auto& x : report.violations) {
      v.push_back({{"pair", x.pair_index},
                   {"constraint", x.constraint},
                   {"message", x.message}});
    }
    return v.dump();
  });
  m.def("discrepancy", [](const std::string& sets, const std::string& swaps) {
    const auto ds = parse_sets(sets);
    return discrepancy(ds, swap_set_from_text(swaps, ds.t));
  });
  m.def("apply_swaps", [](const std::string& sets, const std::string& swaps) {
    const auto ds = parse_sets(sets);
    return defining_set_to_json(apply_swaps(ds, swap_set_from_text(swaps, ds.t)))
        .dump();
  });
  m.def("worst_case", &worst_case_json, py::arg("sets"),
        py::arg("strategy") = "bnb", py::arg("workers") = 1,
        py::arg("collect_maximizers") = false);
  m.def("find_optimal", &search_json, py::arg("t"), py::arg("workers") = 1);
  m.def("count_swap_sets", &count_swap_sets, py::arg("t"));
  m.def("lower_bound", [](std::int64_t t) { return lower_bound(t).to_string(); });
  m.def("upper_bound", &upper_bound, py::arg("z"));
  m.def("graphs",
        [](const std::string& sets, const std::string& swaps,
           const std::string& format, const std::string& membership) {
          const auto ds = parse_sets(sets);
          const auto s = swap_set_from_text(swaps, ds.t);
          return export_graphs(build_swp(ds, s),
                               build_pot(ds, s, parse_membership(membership)),
                               parse_graph_format(format));
        },
        py::arg("sets"), py::arg("swaps"), py::arg("format") = "json",
        py::arg("membership") = "literal");
  m.def("run_cli", &run_cli, py::arg("args"));
}
