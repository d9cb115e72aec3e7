#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "dcay/error.hpp"
#include "dcay/graph_io.hpp"

namespace dcay::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"dcay"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, IntLists) {
  EXPECT_EQ(parse_int_list("3..6"), (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(parse_int_list("7,11,13"), (std::vector<int>{7, 11, 13}));
  EXPECT_EQ(parse_int_list("3..4,9"), (std::vector<int>{3, 4, 9}));
  EXPECT_TRUE(parse_int_list("5..4").empty());
  EXPECT_THROW(parse_int_list("3..x"), Error);
}

TEST(Cli, Classify) {
  const auto three = run_cli({"classify", "-n", "7", "-S", "r^1,r^6,s,s*r^3"});
  EXPECT_EQ(three.code, kOk);
  EXPECT_TRUE(contains(three.out, "case: III")) << three.out;
  const auto four = run_cli({"classify", "-n", "6", "-S", "r^1,r^5,r^3,s*r^2"});
  EXPECT_TRUE(contains(four.out, "case: IV")) << four.out;
  const auto bad = run_cli({"classify", "-n", "6", "-S", "r^1,r^2"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_TRUE(contains(bad.err, "NotInverseClosed")) << bad.err;
  const auto json = run_cli({"classify", "-n", "7", "-S", "s,s*r,s*r^2,s*r^4", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out).at("d"), 1);
}

TEST(Cli, Analyze) {
  const auto oct = run_cli({"analyze", "-n", "6", "-S", "r^1,r^5,r^2,r^4"});
  EXPECT_EQ(oct.code, kOk);
  EXPECT_TRUE(contains(oct.out, "2 components ≅ K_{2,2,2}")) << oct.out;
  const auto crown = run_cli({"analyze", "-n", "5", "-S", "s,s*r^1,s*r^2,s*r^3"});
  EXPECT_TRUE(contains(crown.out, "crown(5), 4 perfect matchings")) << crown.out;

  const auto dir = std::filesystem::temp_directory_path();
  const auto dot = (dir / "dcay_test_analyze.dot").string();
  const auto g6 = (dir / "dcay_test_analyze.g6").string();
  const auto files = run_cli({"analyze", "-n", "5", "-S", "s,s*r^1,s*r^2,s*r^3", "--dot", dot, "--graph6", g6});
  EXPECT_EQ(files.code, kOk);
  std::ifstream dot_in(dot), g6_in(g6);
  ASSERT_TRUE(dot_in && g6_in);
  std::string first, code;
  std::getline(dot_in, first);
  EXPECT_TRUE(contains(first, "graph"));
  g6_in >> code;
  EXPECT_EQ(parse_graph6(code).edge_count(), 20U);
  std::remove(dot.c_str());
  std::remove(g6.c_str());

  const auto json = run_cli({"analyze", "-n", "10", "-S", "r^2,r^-2,r^4,r^-4", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j.at("case"), "I");
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_EQ(j.at("components"), 4);
  EXPECT_EQ(j.at("component_iso"), "Circ(5;[1,2])");
  EXPECT_EQ(j.at("verified"), true);
}

TEST(Cli, Aut) {
  const auto wreath = run_cli({"aut", "-n", "7", "-S", "r^1,r^6,r^2,r^5"});
  EXPECT_EQ(wreath.code, kOk);
  EXPECT_TRUE(contains(wreath.out, "|Aut| = 392")) << wreath.out;
  EXPECT_TRUE(contains(wreath.out, "normal: no"));
  const auto crown = run_cli({"aut", "-n", "5", "-S", "s,s*r^1,s*r^2,s*r^3", "--format", "json"});
  const auto j = nlohmann::json::parse(crown.out);
  EXPECT_EQ(j.at("aut_order"), "240");
  EXPECT_EQ(j.at("group").at("order"), "240");
  const auto capped = run_cli({"--cap", "8", "aut", "-n", "7", "-S", "r^1,r^6,s,s*r^2"});
  EXPECT_EQ(capped.code, kCapExceeded);
}

TEST(Cli, Verify) {
  const auto wreath = run_cli({"verify", "thm3.7", "--p", "7,11,13", "--t", "2"});
  EXPECT_EQ(wreath.code, kOk);
  EXPECT_EQ(count_lines(wreath.out), 3U);
  EXPECT_FALSE(contains(wreath.out, "refuted"));
  const auto cor = run_cli({"verify", "cor3.12", "--p", "7"});
  EXPECT_TRUE(contains(cor.out, "verified")) << cor.out;

  const auto sweep = run_cli({"verify", "thm5.2", "--n", "3..6"});
  EXPECT_EQ(sweep.code, kUnexpectedRefutation);
  EXPECT_TRUE(contains(sweep.out, "{\"n\":3,\"k\":1,")) << sweep.out;
  EXPECT_TRUE(contains(sweep.out, "UNEXPECTED"));
  const auto expected = run_cli({"verify", "thm5.2", "--n", "3..6", "--expect-discrepancies", "all"});
  EXPECT_EQ(expected.code, kOk);
  const auto single = run_cli({"verify", "thm5.2", "--n", "3", "--k", "1", "--expect-discrepancies", "n=3,k=1"});
  EXPECT_EQ(single.code, kOk);

  const auto json = run_cli({"verify", "thm5.2", "--n", "3", "--k", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0].at("verdict"), "refuted");
  EXPECT_EQ(j[0].at("witness").at("observed"), "48");

  EXPECT_EQ(run_cli({"verify", "thm9.9"}).code, kUsage);
}

TEST(Cli, Tables) {
  const auto one = run_cli({"tables", "1"});
  EXPECT_EQ(one.code, kOk);
  EXPECT_TRUE(contains(one.out, "all rows match")) << one.out;
  const auto two = run_cli({"tables", "2", "--json"});
  EXPECT_EQ(two.code, kOk);
  const auto j = nlohmann::json::parse(two.out);
  EXPECT_EQ(j.at("rows").size(), 4U);
  EXPECT_EQ(j.at("all_match"), true);
  EXPECT_EQ(run_cli({"tables", "3"}).code, kUsage);
}

TEST(Cli, Sweep) {
  const auto header = run_cli({"sweep", "case3", "--n", "5..4"});
  EXPECT_EQ(header.code, kOk);
  EXPECT_EQ(count_lines(header.out), 1U);
  EXPECT_TRUE(contains(header.out, "template,n,k,S,case"));

  const auto crown = run_cli({"sweep", "crown", "--n", "4..6", "--format", "json"});
  const auto j = nlohmann::json::parse(crown.out);
  ASSERT_EQ(j.size(), 3U);
  EXPECT_EQ(j[0].at("aut_order"), "48");
  EXPECT_EQ(j[1].at("aut_order"), "240");
  EXPECT_EQ(j[2].at("aut_order"), "1440");
  for (const auto& row : j) EXPECT_EQ(row.at("verdict"), "verified");

  const auto serial = run_cli({"sweep", "CaseIII", "--n", "4..8", "--jobs", "1"});
  const auto parallel = run_cli({"sweep", "case3", "--n", "4..8", "--jobs", "4"});
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(count_lines(serial.out), 1U + 3 + 4 + 5 + 6 + 7);

  const auto capped = run_cli({"--cap", "12", "sweep", "knn", "--n", "5..7"});
  EXPECT_EQ(capped.code, kOk);
  EXPECT_TRUE(contains(capped.out, "cap: 14 vertices exceeds 12")) << capped.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"classify", "-n", "7"}).code, kUsage);
  EXPECT_EQ(run_cli({"sweep", "case9", "--n", "4"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

}  // namespace
}  // namespace dcay::cli
