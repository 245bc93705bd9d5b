#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace parkstat::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Stats) {
  const auto r = invoke({"stats", "--word", "3,4,1,1,8,3,4,1,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("z        6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("center   {3,4,6,7,8,9}\n"), std::string::npos);
  EXPECT_NE(r.out.find("run      1\n"), std::string::npos);
  EXPECT_NE(r.out.find("run_set  {8}\n"), std::string::npos);
  EXPECT_NE(r.out.find("parking  true\n"), std::string::npos);

  const auto one = invoke({"--json", "stats", "--word", "1"});
  ASSERT_EQ(one.code, 0);
  const Json j = Json::parse(one.out);
  EXPECT_EQ(j["result"]["z"], "1");
  EXPECT_EQ(j["result"]["run"], "1");

  const auto rook = Json::parse(invoke({"--json", "stats", "--word", "3,1,1"}).out);
  EXPECT_EQ(rook["result"]["parking"], true);
  EXPECT_EQ(rook["result"]["rook"], false);
}

TEST(CliTest, StatsErrors) {
  EXPECT_EQ(invoke({"stats", "--word", "3,x"}).code, 2);
  EXPECT_EQ(invoke({"stats", "--word", "4,1"}).code, 2);
  EXPECT_EQ(invoke({"stats"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliTest, Map) {
  EXPECT_EQ(invoke({"map", "--kind", "phi", "--word", "3,4,1,1,8,3,4,1,4"}).out, "2,1,5,2,8,1,6,3,4\n");
  EXPECT_EQ(invoke({"map", "--kind", "psi", "--word", "3,4,1,1,8,3,4,1,4"}).out, "3,4,2,2,8,3,4,1,4\n");
  EXPECT_EQ(invoke({"map", "--kind", "t-decode", "--code", "1,1,3,4,1,4"}).out, "5,2,1,6,3,4\n");
  EXPECT_EQ(invoke({"map", "--kind", "t-code", "--perm", "5,2,1,6,3,4"}).out, "1,1,3,4,1,4\n");
  EXPECT_EQ(invoke({"map", "--kind", "unburn", "--tree", "3,0,2"}).out, "1,1,2\n");
  EXPECT_EQ(invoke({"map", "--kind", "cyclic", "--word", "3,1,1"}).out, "1,2,2\n");

  const auto burn = invoke({"map", "--kind", "burn", "--word", "1,1,2"});
  ASSERT_EQ(burn.code, 0);
  EXPECT_NE(burn.out.find("tree            3,0,2\n"), std::string::npos) << burn.out;
  EXPECT_NE(burn.out.find("burnt_order     0,2,3,1\n"), std::string::npos);

  const Json j = Json::parse(invoke({"--json", "map", "--kind", "burn", "--word", "1,1,2"}).out);
  EXPECT_EQ(j["result"]["tree"], Json::parse("[3,0,2]"));
  EXPECT_EQ(j["result"]["burnt_order"], Json::parse("[0,2,3,1]"));
}

TEST(CliTest, MapErrors) {
  EXPECT_EQ(invoke({"map", "--kind", "burn", "--word", "2,2"}).code, 3);
  EXPECT_EQ(invoke({"map", "--kind", "cyclic", "--word", "3,3,3"}).code, 3);
  EXPECT_EQ(invoke({"map", "--kind", "t-decode", "--code", "1,3"}).code, 3);
  EXPECT_EQ(invoke({"map", "--kind", "phi"}).code, 2);
  EXPECT_EQ(invoke({"map", "--kind", "bogus", "--word", "1"}).code, 2);
  EXPECT_EQ(invoke({"map", "--kind", "unburn", "--tree", "1,2"}).code, 2);
}

TEST(CliTest, Count) {
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "3"}).out, "4,6,6\n");
  EXPECT_EQ(invoke({"count", "--stat", "run-pf", "--n", "4", "--r", "2", "--method", "closed"}).out, "38\n");
  EXPECT_EQ(invoke({"count", "--stat", "run-rw", "--n", "1", "--r", "1"}).out, "1\n");
  EXPECT_EQ(invoke({"count", "--stat", "center", "--n", "3", "--format", "csv"}).out, "3,1,4\n3,2,6\n3,3,6\n");
  EXPECT_EQ(invoke({"count", "--stat", "center", "--n", "5", "--threads", "4"}).out,
            invoke({"count", "--stat", "center", "--n", "5", "--threads", "1"}).out);

  const Json j = Json::parse(invoke({"--json", "count", "--stat", "run-rw", "--n", "30", "--method", "closed"}).out);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["command"], "count");
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  EXPECT_EQ(j["result"]["enumerator"]["coeffs"]["1"], to_decimal(ipow(29, 29)));
}

TEST(CliTest, CountCaps) {
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "9"}).code, 4);
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "0"}).code, 2);
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "3", "--r", "4"}).code, 2);
  EXPECT_EQ(invoke({"count", "--stat", "nope", "--n", "3"}).code, 2);
  ::setenv("PARKSTAT_CAP", "2", 1);
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "3"}).code, 4);
  EXPECT_EQ(invoke({"count", "--stat", "leg", "--n", "3", "--force"}).code, 0);
  ::unsetenv("PARKSTAT_CAP");
  EXPECT_EQ(default_brute_cap(), 8);
}

TEST(CliTest, Lattice) {
  EXPECT_EQ(invoke({"lattice", "sum", "--parts", "3,1,5,2,4", "--r", "3", "--t", "-3"}).out, "165\n");
  EXPECT_EQ(invoke({"lattice", "sum", "--parts", "3,1,5,2,4", "--r", "3", "--t=-3", "--method", "brute"}).out, "165\n");
  EXPECT_EQ(invoke({"lattice", "count", "--parts", "6,2"}).out, "27\n");
  EXPECT_EQ(invoke({"lattice", "count", "--parts", "3"}).out, "3\n");
  EXPECT_EQ(invoke({"lattice", "count", "--parts", "3", "--method", "brute"}).out, "3\n");
  const auto coimage = invoke({"lattice", "coimage", "--partition", "{1,2}|{3}", "--r", "2"});
  ASSERT_EQ(coimage.code, 0) << coimage.err;
  EXPECT_NE(coimage.out.find("parking           2\n"), std::string::npos) << coimage.out;
  EXPECT_NE(coimage.out.find("parking_with_run  1\n"), std::string::npos);
}

TEST(CliTest, LatticeErrors) {
  EXPECT_EQ(invoke({"lattice", "count", "--parts", "3,a"}).code, 2);
  EXPECT_EQ(invoke({"lattice", "count", "--parts", "3,0"}).code, 2);
  EXPECT_EQ(invoke({"lattice", "sum", "--parts", "3,1", "--r", "2"}).code, 2);
  EXPECT_EQ(invoke({"lattice", "sum", "--parts", "3,1"}).code, 2);
}

TEST(CliTest, Verify) {
  const auto r = invoke({"verify", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("leg     4,6,6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("overall: PASS\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  const auto range = invoke({"verify", "--n", "1..5"});
  EXPECT_EQ(range.code, 0);
  EXPECT_NE(range.out.find("overall: PASS"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--n", "1..9"}).code, 4);
  EXPECT_EQ(invoke({"verify", "--n", "5..1"}).code, 2);
}

TEST(CliTest, VerifyIsDeterministic) {
  const auto first = invoke({"verify", "--n", "1..5", "--seed", "42"});
  const auto again = invoke({"verify", "--n", "1..5", "--seed", "42"});
  const auto threaded = invoke({"verify", "--n", "1..5", "--seed", "42", "--threads", "4"});
  EXPECT_EQ(first.out, again.out);
  EXPECT_EQ(first.out, threaded.out);
  const auto other_seed = invoke({"verify", "--n", "1..5", "--seed", "7"});
  EXPECT_EQ(other_seed.code, 0);
}

TEST(CliTest, Export) {
  EXPECT_EQ(invoke({"export", "--tree", "3,0,2", "--format", "dot"}).out,
            "digraph tree {\n  0;\n  1;\n  2;\n  3;\n  0 -> 2;\n  2 -> 3;\n  3 -> 1;\n}\n");
  EXPECT_EQ(invoke({"export", "--tree", "0,0,0"}).out,
            "digraph tree {\n  0;\n  1;\n  2;\n  3;\n  0 -> 3;\n  0 -> 2;\n  0 -> 1;\n}\n");
  const auto big = invoke({"export", "--tree", to_string(dfs_burn(parse_word("3,4,1,1,8,3,4,1,4")).tree)});
  EXPECT_NE(big.out.find("  9;\n"), std::string::npos);
  EXPECT_EQ(big.out.find("  10;\n"), std::string::npos);
  EXPECT_EQ(invoke({"export", "--tree", "2,1"}).code, 2);
  EXPECT_EQ(invoke({"export", "--tree", "0", "--format", "png"}).code, 2);
}

TEST(CliTest, Help) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace parkstat::cli
