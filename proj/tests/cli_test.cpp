#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "resilset/cli.hpp"
#include "resilset/documents.hpp"

namespace resil {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("resilset_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "resilset");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  json out_json() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

constexpr const char* kOptimalT2 =
    R"({"t":2,"pairs":[{"odd":[1,8],"even":[3,6]},{"odd":[2,7],"even":[4,5]}]})";
constexpr const char* kT1 = R"({"t":1,"pairs":[{"odd":[1,4],"even":[2,3]}]})";

TEST_F(Cli, ConstructZ2) {
  ASSERT_EQ(run({"construct", "--z", "2"}), cli::kPass);
  const auto ds = defining_set_from_json(out_json());
  EXPECT_EQ(ds.t, 4);
  EXPECT_TRUE(validate_defining_set(ds).ok());
}

TEST_F(Cli, ConstructZ4ToFile) {
  const auto path = (dir_ / "z4.json").string();
  ASSERT_EQ(run({"construct", "--z", "4", "--out", path}), cli::kPass);
  std::ifstream in(path);
  const auto ds = defining_set_from_json(json::parse(in));
  EXPECT_EQ(ds.t, 19);
  EXPECT_TRUE(validate_defining_set(ds).ok());
}

TEST_F(Cli, ConstructZ1Rejected) {
  EXPECT_EQ(run({"construct", "--z", "1"}), cli::kInvalidInput);
  EXPECT_NE(err_.str().find("z >= 2"), std::string::npos);
}

TEST_F(Cli, EvalWithSwaps) {
  const auto sets = write("s.json", kOptimalT2);
  const auto swaps = write("i.json", "[[1,2],[5,6]]");
  ASSERT_EQ(run({"eval", "--sets", sets, "--swaps", swaps}), cli::kPass);
  EXPECT_EQ(out_json(), 4);
}

TEST_F(Cli, EvalEmptySwaps) {
  const auto sets = write("s.json", kOptimalT2);
  const auto swaps = write("i.json", "");
  ASSERT_EQ(run({"eval", "--sets", sets, "--swaps", swaps}), cli::kPass);
  EXPECT_EQ(out_json(), 0);
}

TEST_F(Cli, EvalWorstCaseCertificate) {
  ASSERT_EQ(run({"construct", "--z", "2", "--out", (dir_ / "b.json").string()}),
            cli::kPass);
  ASSERT_EQ(run({"eval", "--sets", (dir_ / "b.json").string(), "--worst-case"}),
            cli::kPass);
  const auto doc = out_json();
  EXPECT_EQ(doc.at("worst_case"), 6);
  EXPECT_EQ(doc.at("minimal_maximizer").size(), 3u);
}

TEST_F(Cli, EvalNeedsExactlyOneMode) {
  const auto sets = write("s.json", kOptimalT2);
  EXPECT_EQ(run({"eval", "--sets", sets}), cli::kInvalidInput);
}

TEST_F(Cli, MissingFileIsIoError) {
  EXPECT_EQ(run({"eval", "--sets", (dir_ / "nope.json").string(), "--worst-case"}),
            cli::kIoError);
}

TEST_F(Cli, MalformedDocumentIsInvalidInput) {
  const auto sets = write("s.json", "{\"t\": 1");
  EXPECT_EQ(run({"eval", "--sets", sets, "--worst-case"}), cli::kInvalidInput);
}

TEST_F(Cli, SearchT1AndT2) {
  ASSERT_EQ(run({"search", "--t", "1"}), cli::kPass);
  EXPECT_EQ(out_json().at("d_star"), 2);
  EXPECT_EQ(out_json().at("optima").size(), 1u);
  ASSERT_EQ(run({"search", "--t", "2"}), cli::kPass);
  EXPECT_EQ(out_json().at("d_star"), 4);
}

TEST_F(Cli, SearchT4) {
  ASSERT_EQ(run({"search", "--t", "4", "--workers", "2"}), cli::kPass);
  const auto doc = out_json();
  EXPECT_EQ(doc.at("d_star"), 6);
  EXPECT_EQ(doc.at("optima").size(), 1u);
  EXPECT_TRUE(doc.at("certified").get<bool>());
}

TEST_F(Cli, SearchRefusedAboveLimit) {
  EXPECT_EQ(run({"search", "--t", "7"}), cli::kSizeRefused);
}

TEST_F(Cli, VerifyZ2SelectedChecks) {
  ASSERT_EQ(run({"verify", "--z", "2", "--checks", "bounds,eq8,lemma2,eq10"}),
            cli::kPass);
  const auto doc = out_json();
  for (const auto* c : {"bounds", "eq8", "lemma2", "eq10"}) {
    EXPECT_TRUE(doc.at("checks").at(c).at("holds").get<bool>()) << c;
  }
  EXPECT_EQ(doc.at("checks").size(), 4u);
}

TEST_F(Cli, VerifyZ2Default) {
  EXPECT_EQ(run({"verify", "--z", "2"}), cli::kPass);
}

TEST_F(Cli, VerifyLemma1) {
  ASSERT_EQ(run({"verify", "--z", "2", "--checks", "lemma1"}), cli::kPass);
  const auto details = out_json().at("checks").at("lemma1").at("details");
  EXPECT_EQ(details.at("d_z"), 6);
  EXPECT_EQ(details.at("d_z_plus_1"), 14);
}

TEST_F(Cli, VerifyUnbalanced) {
  const auto sets =
      write("u.json", R"({"t":1,"pairs":[{"odd":[1,3],"even":[2,4]}]})");
  EXPECT_EQ(run({"verify", "--sets", sets}), cli::kCheckFailed);
  const auto doc = out_json();
  EXPECT_FALSE(doc.at("checks").at("balance").at("holds").get<bool>());
  EXPECT_TRUE(doc.at("worst_case").is_null());
}

TEST_F(Cli, VerifyRandomSeedDeterministic) {
  ASSERT_EQ(run({"verify", "--random-t", "4", "--seed", "9"}), cli::kPass);
  const auto first = out_json();
  ASSERT_EQ(run({"verify", "--random-t", "4", "--seed", "9"}), cli::kPass);
  EXPECT_EQ(first, out_json());
}

TEST_F(Cli, VerifyUnknownCheck) {
  EXPECT_EQ(run({"verify", "--z", "2", "--checks", "nope"}), cli::kInvalidInput);
}

TEST_F(Cli, VerifyExpiredBudgetIsRefusal) {
  EXPECT_EQ(run({"verify", "--z", "4", "--time-budget", "0.001"}),
            cli::kSizeRefused);
}

TEST_F(Cli, GraphsDotAndJson) {
  const auto sets = write("s.json", kT1);
  ASSERT_EQ(run({"graphs", "--sets", sets, "--minimal-maximizer", "--format",
                 "dot"}),
            cli::kPass);
  EXPECT_NE(out_.str().find("v1 -> v0"), std::string::npos);
  ASSERT_EQ(run({"graphs", "--sets", sets, "--minimal-maximizer", "--format",
                 "json"}),
            cli::kPass);
  const auto pair = graphs_from_json(out_json());
  EXPECT_EQ(pair.pot.arcs.size(), 2u);
  EXPECT_EQ(pair.swp.edges.size(), 1u);
}

TEST_F(Cli, GraphsDoubleEdge) {
  const auto sets = write("s.json", kOptimalT2);
  const auto swaps = write("i.json", "[[1,2],[5,6]]");
  ASSERT_EQ(run({"graphs", "--sets", sets, "--swaps", swaps}), cli::kPass);
  const auto dot = out_.str();
  const auto first = dot.find("v1 -- v2");
  ASSERT_NE(first, std::string::npos);
  EXPECT_NE(dot.find("v1 -- v2", first + 1), std::string::npos);
}

TEST_F(Cli, UnknownSubcommandAndHelp) {
  EXPECT_EQ(run({"frobnicate"}), cli::kInvalidInput);
  EXPECT_EQ(run({"--help"}), cli::kPass);
}

TEST_F(Cli, Deterministic) {
  ASSERT_EQ(run({"verify", "--z", "3", "--checks", "eq8,lemma2"}), cli::kPass);
  const auto a = out_.str();
  ASSERT_EQ(run({"verify", "--z", "3", "--checks", "eq8,lemma2", "--workers",
                 "3"}),
            cli::kPass);
  EXPECT_EQ(a, out_.str());
}

}  // namespace
}  // namespace resil
