#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "cnckit/json_io.hpp"

using cnckit::Json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result cli(const std::string& args) {
  std::string cmd = std::string(CNCKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, NormalizeGivesTheReducedSubgroup) {
  Result r = cli("--group int normalize 'coset(4,0)|coset(4,2)'");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["modulus"], 2);
  EXPECT_EQ(j["classes"].size(), 1u);
  EXPECT_EQ(j["classes"][0]["residue"], "0");
}

TEST(Cli, Membership) {
  Result r = cli("--group 'z+alpha:(1+1*sqrt(5))/2' member 'coset(2,0)' '1+1*alpha'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["member"], false);
  EXPECT_EQ(Json::parse(cli("member 'coset(3,1)' 7").out)["member"], true);
}

TEST(Cli, OutputIsByteStable) {
  for (const char* args : {"--group lexint:2 decompose 'coset(2,(0,1)) & interval([0],[5])'", "--prime 3 padic index 2",
                           "--group rat window --window -2,2,2 'interval(0,sqrt(2),())'", "check examples"}) {
    Result a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(cli("--group nope subgroups").code, 2);
  EXPECT_EQ(cli("--bogus 1 subgroups").code, 2);
  EXPECT_EQ(cli("normalize '!('").code, 2);
  EXPECT_EQ(cli("normalize 'arc(0,5)'").code, 2);
  EXPECT_EQ(cli("check nosuch").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("--format yaml subgroups").code, 2);
}

TEST(Cli, FailuresExitWithOne) {
  EXPECT_EQ(cli("--window -1000,1000 --cap 10 window 'all()'").code, 1);
}

TEST(Cli, TextFormat) {
  Result r = cli("--format text --group lexint:2 rn 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level     1"), std::string::npos) << r.out;
}

TEST(Cli, SeedFromEnvironment) {
  Result a = cli("--seed 1 check subgroup-reduce --scale 0.1");
  Result b = cli("--seed 1 check subgroup-reduce --scale 0.1");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::string cmd = std::string("CNCKIT_SEED=x ") + CNCKIT_CLI + " check subgroup-reduce >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Cli, PAdicCommands) {
  EXPECT_EQ(Json::parse(cli("--prime 3 padic val 18").out)["valuation"], "2");
  EXPECT_EQ(Json::parse(cli("--prime 7 padic pow 2 2").out)["nth_power"], true);
  EXPECT_EQ(Json::parse(cli("--prime 2 padic ball 9 1 3").out)["in_ball"], true);
  Json g = Json::parse(cli("--prime 3 padic germ 'pnpow(2)' 'pnpow(2) | (pnpow(2,2) & ball(0,50))'").out);
  EXPECT_EQ(g["equal"], false);
  EXPECT_EQ(g["discrepancy_level"], 50);
}
