#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// stdout only; stderr is folded in when merge is set
CliRun run(const std::string& args, bool merge = false) {
  std::string cmd = std::string("WREATH_NO_CACHE=1 ") + WREATH_CLI_PATH + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, CheckPairDiagonal) {
  CliRun r = run("check-pair 'B(2)' diag");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_FALSE(j["strong_gelfand"].get<bool>());
  EXPECT_EQ(j["witness"]["multiplicity"], 2);
}

TEST(Cli, CheckPairPassive) {
  CliRun r = run("check-pair 'B(2)' 'S(2)'");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r)["strong_gelfand"].get<bool>());
}

TEST(Cli, ClassifyThree) {
  CliRun r = run("classify --n 3 --method both");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["counts"]["strong_gelfand"], 22);
}

TEST(Cli, OutputIsByteIdentical) {
  CliRun a = run("classify --n 3 --method both"), b = run("classify --n 3 --method both --threads 3");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BranchLemma) {
  CliRun r = run("branch --lemma L2.5 --label '[],[1]' --n 3");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_NE(j.dump().find("[2,1]"), std::string::npos);
  CliRun t = run("branch --lemma L2.5 --label '[],[1]' --n 3 --format text --verify");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("S^([],[3]) + S^([],[2,1])"), std::string::npos) << t.out;
}

TEST(Cli, Multiplicity) {
  CliRun r = run("mult --w '[4,3,2,1]' --label '[3,2,1],[3,1]'");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('3'), std::string::npos);
}

TEST(Cli, BadDescriptorIsUsageError) {
  CliRun r = run("check-pair 'B(2)' 'Q(2)'", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("grammar"), std::string::npos);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("branch --lemma L9.9 --label '[1],[]' --n 3").code, 2);
}

TEST(Cli, BudgetExhaustionIsResourceError) {
  CliRun r = run("classify --n 5 --method oracle", true);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("resource"), std::string::npos);
}

TEST(Cli, TableAndCsv) {
  CliRun r = run("table1 --n 9");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["count"], 37);
  CliRun c = run("classify --n 2 --method oracle --format csv");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("descriptor,order,verdict", 0), 0u);
}
