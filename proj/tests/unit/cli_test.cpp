#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tessera/cli/acceptance.hpp"
#include "tessera/cli/app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tessera");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tessera::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ClassifyMarkdownReproducesTable) {
  auto r = invoke({"classify", "--group", "Z4", "--basis", "left", "--mode", "shaped"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| C | 0 |  1 |  2 |  3 |\n"
                       "|---|--:|---:|---:|---:|\n"
                       "| 0 | 1 |  1 |  1 |  1 |\n"
                       "| 1 | 1 |  1 |  1 | -1 |\n"
                       "| 2 | 1 | -1 | -1 |  1 |\n"
                       "| 3 | 1 |  1 | -1 |  1 |\n"),
            std::string::npos);
}

TEST(Cli, ClassifyJson) {
  auto r = invoke({"--format", "json", "classify", "--group", "Z2xZ2", "--basis", "right"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["survivor_count"], 1);
  EXPECT_EQ(j["rejected_count"], 31);
}

TEST(Cli, IdentitiesPatternSix) {
  auto r = invoke({"identities", "--algebra", "tes", "--pattern", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["dimension"], 34);
}

TEST(Cli, CohomologyChecks) {
  auto r = invoke({"--format", "json", "cohomology", "--algebra", "tes", "--check", "cocycle,separable"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["checks"]["cocycle"]["holds"].get<bool>());
  EXPECT_FALSE(j["checks"]["separable"]["holds"].get<bool>());
}

TEST(Cli, AnalyzeReportsChirality) {
  auto r = invoke({"analyze", "--algebra", "tes", "--report", "inverses,series", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["inverses"]["kind"], "chiral");
  EXPECT_EQ(j["series"]["derived"], nlohmann::json({4, 3, 1, 0}));
}

TEST(Cli, DeformAndEncrypt) {
  auto d = invoke({"--format", "json", "deform", "--family", "1", "--k", "4", "--checks", "neccons,inverse-iso"});
  ASSERT_EQ(d.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(d.out)["k_inverse"]["matches"].get<bool>());
  auto e = invoke({"--format", "json", "encrypt", "--key", "1,1,0,0", "--msg", "5,6,7,8"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out)["ciphertext"], "[6, 0, 7, 1]");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"classify", "--no-such-flag"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--algebra", "octonions"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--report", "everything"}).code, 2);
  EXPECT_EQ(invoke({"encrypt", "--p", "2", "--key", "1,0,0,0", "--msg", "1,1,1,1"}).code, 2);
  EXPECT_EQ(invoke({"accept", "--criterion", "99"}).code, 2);
}

TEST(Cli, MalformedAlgebraFile) {
  std::string path = ::testing::TempDir() + "tessera_bad_algebra.json";
  {
    std::ofstream f(path);
    f << R"({"group": "Z4", "basis": "left-standard", "C": [[1, 1], [1]]})";
  }
  auto r = invoke({"analyze", "--algebra", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  std::remove(path.c_str());
}

TEST(Cli, AlgebraFromFile) {
  std::string path = ::testing::TempDir() + "tessera_quat.json";
  {
    std::ofstream f(path);
    f << R"({"group": "Z2xZ2", "basis": "right-standard", "C": [[1,1,1,1],[1,-1,1,-1],[1,-1,-1,1],[1,1,-1,-1]]})";
  }
  auto r = invoke({"--format", "json", "analyze", "--algebra", path, "--report", "inverses"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["inverses"]["kind"], "two-sided");
  std::remove(path.c_str());
}

TEST(Cli, SeededOutputIsReproducible) {
  auto a = invoke({"--format", "json", "--seed", "5", "norms", "--check", "triangle", "--samples", "50"});
  auto b = invoke({"--format", "json", "--seed", "5", "norms", "--check", "triangle", "--samples", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AcceptSingleCriterion) {
  auto r = invoke({"--format", "json", "accept", "--criterion", "14"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 1);
  EXPECT_TRUE(j["criteria"][0]["passed"].get<bool>());
  EXPECT_EQ(tessera::cli::criteria().size(), 14u);
  EXPECT_THROW(tessera::cli::run_criterion(0), std::out_of_range);
}
