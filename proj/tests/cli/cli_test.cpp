#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "../fixtures/reference_data.hpp"
#include "../support/helpers.hpp"
#include "../support/run.hpp"
#include "icopt/examples.hpp"
#include "json.hpp"

namespace icopt {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::run;

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = testing::scratch_dir("cli");
    ASSERT_EQ(run(cmd("--seed-examples " + dir_.string())).exit_code, 0);
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string cmd(const std::string& args) { return std::string(ICOPT_CLI) + " " + args; }
  static std::string example(int k) { return (dir_ / ("example" + std::to_string(k) + ".json")).string(); }
  static std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static inline fs::path dir_;
};

TEST_F(Cli, SeedWritesFourExamples) {
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(fs::exists(example(k)));
}

TEST_F(Cli, SolveCyclicThree) {
  const auto r = run(cmd("solve " + example(1)));
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["optimal_length"], 2);
  EXPECT_EQ(doc["mu"], 1);
  EXPECT_EQ(doc["lower_bound"], 3);
  EXPECT_EQ(doc["code_count"], 3);
  EXPECT_EQ(doc["codes"], json::parse(R"([["x1+x2","x1+x3"],["x1+x2","x2+x3"],["x1+x3","x2+x3"]])"));
  EXPECT_LT(r.out.find("optimal_length"), r.out.find("\"mu\""));
  EXPECT_LT(r.out.find("\"mu\""), r.out.find("lower_bound"));
  EXPECT_LT(r.out.find("lower_bound"), r.out.find("code_count"));
  EXPECT_LT(r.out.find("code_count"), r.out.find("\"codes\""));
}

TEST_F(Cli, SolveExampleThree) {
  const auto doc = json::parse(run(cmd("solve " + example(3))).out);
  EXPECT_EQ(doc["mu"], 2);
  EXPECT_EQ(doc["code_count"], 56);
}

TEST_F(Cli, SolveIsDeterministic) {
  EXPECT_EQ(run(cmd("solve " + example(4))).out, run(cmd("solve " + example(4))).out);
  EXPECT_EQ(run(cmd("analyze --minmax " + example(4))).out, run(cmd("analyze --minmax " + example(4))).out);
}

TEST_F(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run(cmd("solve " + write("bad.json", "{\"n\": 3,"))).exit_code, 1);
  EXPECT_EQ(run(cmd("solve " + write("overlap.json", R"({"n":2,"receivers":[{"wants":[1]},{"wants":[1,2]}]})")))
                .exit_code,
            1);
  EXPECT_EQ(run(cmd("solve " + (dir_ / "missing.json").string())).exit_code, 1);
}

TEST_F(Cli, UsageErrorsExitSixtyFour) {
  EXPECT_EQ(run(cmd("")).exit_code, 64);
  EXPECT_EQ(run(cmd("frobnicate")).exit_code, 64);
  EXPECT_EQ(run(cmd("verify " + example(1))).exit_code, 64);
  EXPECT_EQ(run(cmd("verify " + example(1) + " --length 0")).exit_code, 64);
  EXPECT_EQ(run(cmd("export " + example(1) + " --length 2 --format png --out " + dir_.string())).exit_code, 64);
  EXPECT_EQ(run(cmd("--help")).exit_code, 0);
}

TEST_F(Cli, BudgetExitsTwo) {
  EXPECT_EQ(run("ICOPT_BUDGET_BITS=10 " + cmd("verify " + example(2) + " --length 3")).exit_code, 2);
  EXPECT_EQ(run("ICOPT_BUDGET_BITS=2 " + cmd("solve " + example(1))).exit_code, 2);
  EXPECT_EQ(run("ICOPT_BUDGET_BITS=zz " + cmd("solve " + example(1))).exit_code, 1);
}

TEST_F(Cli, VerifyCyclicThreeLengthOne) {
  const auto doc = json::parse(run(cmd("verify " + example(1) + " --length 1")).out);
  EXPECT_EQ(doc["verdict"], "infeasible");
  EXPECT_EQ(doc["s_prime_size"], 8);
  EXPECT_EQ(doc["s_size"], 0);
  EXPECT_FALSE(doc.contains("candidates"));
}

TEST_F(Cli, VerifyExampleTwo) {
  const auto one = json::parse(run(cmd("verify " + example(2) + " --length 1 --candidates")).out);
  EXPECT_EQ(one["verdict"], "infeasible");
  EXPECT_EQ(one["s_prime_size"], 16);
  std::set<std::vector<std::string>> got;
  for (const auto& t : one["candidates"]) got.insert(t.get<std::vector<std::string>>());
  EXPECT_EQ(got.size(), 16U);
  const auto cmp =
      testing::compare_with_listed(examples::example2(), 1, got, fixtures::kExample2Length1Candidates);
  EXPECT_EQ(cmp.verbatim, 11U);
  EXPECT_TRUE(cmp.accounted);
  EXPECT_EQ(json::parse(run(cmd("verify " + example(2) + " --length 2")).out)["verdict"], "optimal");
  const auto three = json::parse(run(cmd("verify " + example(2) + " --length 3")).out);
  EXPECT_EQ(three["verdict"], "feasible-but-suboptimal");
  EXPECT_TRUE(three["positive_lambda_example"].is_array());
  EXPECT_GT(three["lambda_histogram"][1].get<int>(), 0);
}

TEST_F(Cli, ExportDot) {
  const auto out = dir_ / "dot";
  ASSERT_EQ(run(cmd("export " + example(1) + " --length 2 --format dot --out " + out.string())).exit_code, 0);
  std::ifstream in(out / "graph.dot");
  std::string line;
  std::size_t edges = 0;
  while (std::getline(in, line)) edges += line.find("->") != std::string::npos ? 1 : 0;
  EXPECT_EQ(edges, 17U);
}

TEST_F(Cli, ExportMatrices) {
  const auto out = dir_ / "mat";
  ASSERT_EQ(run(cmd("export " + example(1) + " --length 2 --format matrices --out " + out.string())).exit_code, 0);
  std::ifstream in(out / "matrices.json");
  const auto doc = json::parse(in);
  std::vector<std::string> a(fixtures::kExample1A.begin(), fixtures::kExample1A.end());
  EXPECT_EQ(doc["A"].get<std::vector<std::string>>(), a);
  EXPECT_EQ(doc["solution"]["M"], json::parse(R"(["100","010","001"])"));

  const auto low = dir_ / "mat1";
  ASSERT_EQ(run(cmd("export " + example(1) + " --length 1 --format matrices --out " + low.string())).exit_code, 0);
  std::ifstream in1(low / "matrices.json");
  EXPECT_TRUE(json::parse(in1)["solution"].is_null());

  const auto high = dir_ / "mat3";
  ASSERT_EQ(run(cmd("export " + example(1) + " --length 3 --format matrices --out " + high.string())).exit_code, 0);
  std::ifstream in3(high / "matrices.json");
  EXPECT_EQ(json::parse(in3)["solution"]["M"], json::parse(R"(["100","010","001"])"));
}

TEST_F(Cli, AnalyzeCyclicThree) {
  const auto doc = json::parse(run(cmd("analyze --minmax " + example(1))).out);
  EXPECT_EQ(doc["min_max"], 2);
  EXPECT_EQ(doc["winners"].size(), 3U);
  for (const auto& row : doc["codes"]) {
    EXPECT_EQ(row["max_used"], 2);
    EXPECT_TRUE(row["winner"].get<bool>());
  }
  const auto plain = json::parse(run(cmd("analyze " + example(1))).out);
  EXPECT_FALSE(plain.contains("min_max"));
  EXPECT_EQ(plain["codes"].size(), 3U);
}

TEST_F(Cli, AnalyzeNoSideInformation) {
  const auto f = write("plain2.json", R"({"n":2,"receivers":[{"wants":1},{"wants":2}]})");
  const auto doc = json::parse(run(cmd("analyze --minmax " + f)).out);
  EXPECT_EQ(doc["min_max"], 1);
  EXPECT_EQ(doc["winners"], json::parse(R"([["x1","x2"]])"));
}

TEST_F(Cli, AnalyzeCyclicFourFlagsWinners) {
  const auto doc = json::parse(run(cmd("analyze --minmax " + example(4))).out);
  EXPECT_EQ(doc["codes"].size(), 28U);
  std::size_t flagged = 0;
  for (const auto& row : doc["codes"]) flagged += row["winner"].get<bool>() ? 1 : 0;
  EXPECT_EQ(flagged, doc["winners"].size());
  EXPECT_EQ(doc["min_max"], 2);
}

TEST_F(Cli, HiddenOracle) {
  const auto doc = json::parse(run(cmd("oracle " + example(4))).out);
  EXPECT_EQ(doc["optimal_length"], 3);
  EXPECT_EQ(doc["code_count"], 28);
  EXPECT_EQ(run(cmd("--help")).out.find("oracle"), std::string::npos);
  const auto big = write("big.json", R"({"n":6,"receivers":[{"wants":1},{"wants":2},{"wants":3},{"wants":4},{"wants":5},{"wants":6}]})");
  EXPECT_EQ(run(cmd("oracle " + big)).exit_code, 2);
}

}  // namespace
}  // namespace icopt
