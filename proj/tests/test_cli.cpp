#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CMDIV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, ClassifyJsonSingleLevel) {
  const CliRun r = run("classify --jzero 16 --n 3 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["abelian"], true);
  EXPECT_EQ(doc["structure"], nlohmann::json::array({2}));
  EXPECT_EQ(doc["cyclotomic"], true);
  EXPECT_EQ(doc["n"], 3);
}

TEST(Cli, ClassifyText) {
  const CliRun r = run("classify --j1728 9 --n 4");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("Z/2 x Z/2 x Z/2"), std::string::npos) << r.out;
}

TEST(Cli, ClassifyAllLevels) {
  const CliRun r = run("classify --disc -7 --conductor 1 --n all --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc.size(), 11u);
  EXPECT_EQ(doc[0]["n"], 2);
  EXPECT_EQ(doc[0]["abelian"], true);
  EXPECT_EQ(doc[1]["abelian"], false);
}

TEST(Cli, ClassifyErrors) {
  EXPECT_EQ(run("classify --jzero 0 --n 2").exit_code, 2);
  EXPECT_EQ(run("classify --jzero 1 --j1728 1 --n 2").exit_code, 2);
  EXPECT_EQ(run("classify --disc -12 --n 2").exit_code, 2);
  EXPECT_EQ(run("classify --conductor 2 --jzero 1 --n 2").exit_code, 2);
  EXPECT_EQ(run("classify --jzero 1 --n 2 --bogus").exit_code, 2);
  EXPECT_EQ(run("").exit_code, 2);
}

TEST(Cli, ExploreExamples) {
  CliRun r = run("explore --delta -1 --phi 0 --n 2 --json");
  ASSERT_EQ(r.exit_code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 2);
  EXPECT_EQ(doc["abelian"], true);

  r = run("explore --delta -1 --phi 1 --n 2 --json");
  ASSERT_EQ(r.exit_code, 0);
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 6);
  EXPECT_EQ(doc["s3"], true);
  EXPECT_EQ(doc["elements"].size(), 6u);
  EXPECT_EQ(doc["elements"][0].size(), 4u);

  r = run("explore --delta -3 --delta-den 4 --phi 0 --n 9 --json");
  ASSERT_EQ(r.exit_code, 0);
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cartan_order"], 54);
  EXPECT_EQ(doc["cartan_abelian"], true);

  r = run("explore --delta -3 --delta-den 4 --phi 0 --n 9 --adjoin none");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("abelian"), std::string::npos);
}

TEST(Cli, ExploreGenerators) {
  const CliRun r = run("explore --delta -1 --phi 0 --n 5 --generators \"0,1\" --adjoin none --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 4);  // [[0,1],[-1,0]] has order 4
  EXPECT_EQ(doc["invariants"], nlohmann::json::array({4}));
}

TEST(Cli, ExploreErrors) {
  EXPECT_EQ(run("explore --delta -3 --delta-den 4 --n 8").exit_code, 2);
  EXPECT_EQ(run("explore --delta 0 --n 4 --generators \"2,0\" --adjoin none").exit_code, 2);
  EXPECT_EQ(run("explore --delta 0 --n 4 --adjoin sideways").exit_code, 2);
  EXPECT_EQ(run("explore --n 4").exit_code, 2);
}

TEST(Cli, VerifySuiteWithOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "cmdiv_cli_report.json";
  std::filesystem::remove(path);
  const CliRun r = run("verify --suite lemma35 --out " + path.string());
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS level2-types"), std::string::npos);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const auto doc = nlohmann::json::parse(ss.str());
  EXPECT_EQ(doc["summary"]["passed"], 1);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyErrors) {
  EXPECT_EQ(run("verify --suite thm99").exit_code, 2);
  const CliRun r = run("verify --suite thm36 --n-max 8 --json --serial");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["summary"]["total"], 4);
}
