#include <gtest/gtest.h>

#include "resilset/adversary.hpp"
#include "resilset/construct.hpp"
#include "resilset/documents.hpp"
#include "resilset/graphs.hpp"

namespace resil {
namespace {

using json = nlohmann::ordered_json;

const DefiningSet kOptimalT2{2, {{{1, 8}, {3, 6}}, {{2, 7}, {4, 5}}}};
const DefiningSet kT1{1, {{{1, 4}, {2, 3}}}};

TEST(DefiningSetJson, RoundTrip) {
  for (int z = 2; z <= 4; ++z) {
    const auto ds = construct_for_z(z);
    const auto doc = defining_set_to_json(ds);
    EXPECT_EQ(defining_set_from_json(json::parse(doc.dump())), ds);
  }
}

TEST(DefiningSetJson, Shape) {
  const auto doc = defining_set_to_json(kT1);
  EXPECT_EQ(doc.dump(), R"({"t":1,"pairs":[{"odd":[1,4],"even":[2,3]}]})");
}

TEST(DefiningSetJson, StrictFields) {
  EXPECT_THROW(defining_set_from_json(json::parse(R"({"t":1})")), InvalidInput);
  EXPECT_THROW(defining_set_from_json(json::parse(
                   R"({"t":1,"pairs":[],"extra":0})")),
               InvalidInput);
  EXPECT_THROW(defining_set_from_json(json::parse(
                   R"({"t":1,"pairs":[{"odd":[1,4,5],"even":[2,3]}]})")),
               InvalidInput);
  EXPECT_THROW(defining_set_from_json(json::parse(
                   R"({"t":1,"pairs":[{"odd":[1.5,4],"even":[2,3]}]})")),
               InvalidInput);
}

TEST(SwapJson, Forms) {
  EXPECT_EQ(swap_set_from_text("", 2), SwapSet{});
  EXPECT_EQ(swap_set_from_text("[]", 2), SwapSet{});
  EXPECT_EQ(swap_set_from_text("[[1,2],[5,6]]", 2), SwapSet::make(2, {1, 5}));
  EXPECT_EQ(swap_set_from_text(R"({"swaps":[[5,6]]})", 2), SwapSet::make(2, {5}));
  EXPECT_THROW(swap_set_from_text("[[1,3]]", 2), InvalidInput);
  EXPECT_THROW(swap_set_from_text("[[1,2],[2,3]]", 2), InvalidInput);
  EXPECT_THROW(swap_set_from_text("[[8,9]]", 2), InvalidInput);
  EXPECT_THROW(swap_set_from_text("not json", 2), InvalidInput);
  const auto s = SwapSet::make(2, {1, 5});
  EXPECT_EQ(swap_set_from_text(swap_set_to_json(s).dump(), 2), s);
}

TEST(Digest, StableAndSensitive) {
  const auto d = digest(kOptimalT2);
  EXPECT_EQ(d.rfind("sha256:", 0), 0u);
  EXPECT_EQ(d.size(), 7u + 64u);
  EXPECT_EQ(d, digest(kOptimalT2));
  EXPECT_NE(d, digest(kT1));
}

TEST(Dot, T1Maximizer) {
  const auto star = SwapSet::make(1, {1});
  const auto dot = export_dot(build_swp(kT1, star), build_pot(kT1, star));
  EXPECT_NE(dot.find("graph G_swp {"), std::string::npos);
  EXPECT_NE(dot.find("digraph G_pot {"), std::string::npos);
  EXPECT_NE(dot.find("v1 -- v1"), std::string::npos);
  EXPECT_NE(dot.find("v1 -> v0 [label=\"swap=(0,1);cond=b1\"]"),
            std::string::npos);
  EXPECT_NE(dot.find("v1 -> v0 [label=\"swap=(4,5);cond=b1\"]"),
            std::string::npos);
}

TEST(Dot, DoubleEdge) {
  const auto s = SwapSet::make(2, {1, 5});
  const auto dot = export_dot(build_swp(kOptimalT2, s), build_pot(kOptimalT2, s));
  const auto first = dot.find("v1 -- v2");
  ASSERT_NE(first, std::string::npos);
  EXPECT_NE(dot.find("v1 -- v2", first + 1), std::string::npos);
}

TEST(Dot, EmptyGraphsListNodes) {
  const DefiningSet ds{1, {{{1, 4}, {2, 3}}}};
  const auto dot = export_dot(build_swp(ds, SwapSet{}), PotGraph{1, {}});
  EXPECT_NE(dot.find("v1"), std::string::npos);
  EXPECT_EQ(dot.find("--"), std::string::npos);
}

TEST(GraphsJson, RoundTrip) {
  for (int z = 2; z <= 3; ++z) {
    const auto ds = construct_for_z(z);
    const auto star = worst_case(ds).minimal_maximizer;
    const auto swp = build_swp(ds, star);
    const auto pot = build_pot(ds, star);
    const auto back =
        graphs_from_json(json::parse(export_graphs(swp, pot, GraphFormat::json)));
    EXPECT_EQ(back.swp, swp);
    EXPECT_EQ(back.pot, pot);
  }
}

TEST(GraphFormat, Parse) {
  EXPECT_EQ(parse_graph_format("dot"), GraphFormat::dot);
  EXPECT_EQ(parse_graph_format("json"), GraphFormat::json);
  EXPECT_THROW(parse_graph_format("svg"), InvalidInput);
}

TEST(CertificateJson, Shape) {
  Certificate c;
  c.input_digest = digest(base_case());
  c.t = 4;
  c.adversary = worst_case(base_case());
  c.lower_bound = lower_bound(4).to_string();
  c.upper_bound = 6;
  c.checks["eq8"] = {true, json::object()};
  const auto doc = c.to_json();
  EXPECT_EQ(doc.at("worst_case"), 6);
  EXPECT_EQ(doc.at("bounds").at("lower"), "5");
  EXPECT_EQ(doc.at("bounds").at("upper"), 6);
  EXPECT_TRUE(doc.at("checks").at("eq8").at("holds").get<bool>());
  EXPECT_TRUE(c.all_hold());
  c.checks["lemma2"] = {false, json::object()};
  EXPECT_FALSE(c.all_hold());
}

TEST(CertificateJson, NullAdversary) {
  Certificate c;
  c.t = 1;
  c.lower_bound = "1/2";
  const auto doc = c.to_json();
  EXPECT_TRUE(doc.at("worst_case").is_null());
  EXPECT_TRUE(doc.at("bounds").at("upper").is_null());
}

}  // namespace
}  // namespace resil
