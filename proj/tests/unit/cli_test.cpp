#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "iterid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = iterid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(CliTest, Parse) {
  const auto r = run({"parse", "--word", "[x1,x2]"});
  EXPECT_EQ(r.code, iterid::cli::kExitOk);
  EXPECT_NE(r.out.find("x1^-1 x2^-1 x1 x2"), std::string::npos);
}

TEST(CliTest, ParseErrorIsUsage) {
  const auto r = run({"parse", "--word", "x1 + x2"});
  EXPECT_EQ(r.code, iterid::cli::kExitUsage);
  EXPECT_NE(r.err.find("3"), std::string::npos);
  EXPECT_EQ(run({"eval", "--word", "[x1,x2]", "--group", "sym(3)", "--tuple", "(1 2)"}).code,
            iterid::cli::kExitUsage);
  EXPECT_EQ(run({"orbit", "--word", "x1", "--group", "sym(x)", "--tuple", "e"}).code, iterid::cli::kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, iterid::cli::kExitUsage);
}

TEST(CliTest, Eval) {
  const auto r = run({"eval", "--word", "x1 x2", "--group", "sym(3)", "--tuple", "(1 2)", "(2 3)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1 3 2)\n");
}

TEST(CliTest, Iterate) {
  EXPECT_EQ(run({"iterate", "--word", "x1^2", "--n", "3"}).out.find("x1^8"), 0U);
}

TEST(CliTest, OrbitExitCodes) {
  EXPECT_EQ(run({"orbit", "--word", "[x1,[x1,x2]]", "--group", "wreath(int,int)", "--tuple", "(s:1;)", "(s:1; 1:1)"})
                .code,
            0);
  EXPECT_EQ(run({"orbit", "--word-name", "w_BWW", "--group", "alt(5)", "--tuple", "(3 4 5)", "(1 2 3)"}).code, 1);
  EXPECT_EQ(run({"orbit", "--word", "x1^2", "--group", "int", "--tuple", "1", "--budget", "10"}).code, 2);
}

TEST(CliTest, JsonDocument) {
  const auto r = run({"check-e", "--word", "[x1,x2]", "--group", "unitri(3,2)", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "check-e");
  EXPECT_EQ(j["result"]["status"], "holds");
  EXPECT_EQ(j["duration_ms"], 0);
}

TEST(CliTest, JsonErrors) {
  const auto r = run({"parse", "--word", "(x1", "--json"});
  EXPECT_EQ(r.code, iterid::cli::kExitUsage);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["result"].contains("error"));
}

TEST(CliTest, CheckS) {
  const auto r = run({"check-s", "--word-name", "w0", "--group", "sym(4)", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["trace"]["level"], 3);
}

TEST(CliTest, SolvableAndDecompose) {
  EXPECT_EQ(run({"solvable", "--group", "sym(4)"}).code, 0);
  EXPECT_EQ(run({"solvable", "--group", "alt(5)"}).code, 1);
  EXPECT_EQ(run({"decompose", "--word", "x2 x1^3 x2^-1 x3", "--scheme", "uv"}).code, 0);
  EXPECT_EQ(run({"decompose", "--word", "x1^6 [x2,x3]", "--scheme", "nilpotent", "--group", "cyclic(6)"}).code, 0);
}

TEST(CliTest, ReproduceAndList) {
  const auto r = run({"reproduce", "ex-3.4-abelian-depth", "--param", "words=20", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["result"]["passed"].get<bool>());
  EXPECT_EQ(j["result"]["params"]["words"], 20);
  EXPECT_EQ(run({"reproduce", "ex-3.4-abelian-depth", "--param", "nope=1"}).code, iterid::cli::kExitUsage);
  EXPECT_EQ(run({"reproduce", "missing"}).code, iterid::cli::kExitUsage);
  EXPECT_NE(run({"list"}).out.find("prop-6.1-zwrz"), std::string::npos);
}

}  // namespace
