#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "harness/cli.hpp"
#include "harness/serialize.hpp"
#include "p5cops/graph6.hpp"
#include "p5cops/named_graphs.hpp"
#include "p5cops/recognition.hpp"
#include "p5cops/strategy.hpp"
#include "support/fixtures.hpp"

using namespace p5cops;
using namespace p5cops::harness;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "p5cops");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

std::string graph_file(const std::string& name, const Graph& g) { return write_temp(name, write_graph6(g) + "\n"); }

}  // namespace

TEST(Cli, CopNumberOfC5EdgeList) {
  const CliResult r = cli({"copnumber", write_temp("c5.txt", write_edge_list(named::cycle(5)))});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, CopNumberPetersenLimits) {
  const std::string p = graph_file("petersen.g6", named::petersen());
  EXPECT_EQ(cli({"copnumber", p}).out, "3\n");
  EXPECT_EQ(cli({"copnumber", "--kmax", "2", p}).out, ">2\n");
  EXPECT_EQ(cli({"copnumber", "--kmax", "4", p}).code, kExitUsage);
}

TEST(Cli, RecognizeBijoinedWheel) {
  const CliResult r = cli({"recognize", "--bijoined", graph_file("w5.g6", named::wheel(5))});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "bijoined: true, universal vertex: present\n");
}

TEST(Cli, RecognizeReportsWitness) {
  const CliResult r = cli({"recognize", "--p5", "--format", "graph6", graph_file("p5.g6", named::path(5))});
  EXPECT_EQ(r.out, "p5-free: false (0 1 2 3 4)\n");
}

TEST(Cli, ScanThm11OnSix) {
  const std::string report = testing::TempDir() + "thm11.json";
  const CliResult r = cli({"scan", "--check", "thm1.1", "--n", "6", "--report", report, "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  const Json j = Json::parse(fixtures::slurp(report));
  EXPECT_EQ(j.at("status"), "pass");
  EXPECT_EQ(j.at("counts").at("scanned"), 32768);
  EXPECT_TRUE(j.contains("wall_seconds"));
}

TEST(Cli, ScanFindingsExitOne) {
  const CliResult r = cli({"scan", "--check", "thm2.4", "--graph6", write_temp("broken.g6", "A_\nzz\n"), "--report", "-"});
  EXPECT_EQ(r.code, kExitFindings);
  EXPECT_EQ(Json::parse(r.out).at("findings").size(), 1U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"copnumber", "/does/not/exist"}).code, kExitUsage);
  EXPECT_EQ(cli({"copnumber", write_temp("junk.txt", "3 1\n0 7\n")}).code, kExitUsage);
  EXPECT_EQ(cli({"scan", "--check", "thm1.1"}).code, kExitUsage);
  EXPECT_EQ(cli({"scan", "--check", "nope", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(cli({"strategy", "synth", graph_file("p5b.g6", named::path(5))}).code, kExitUsage);
  const CliResult help = cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("scan"), std::string::npos);
}

TEST(Cli, Domineering) {
  EXPECT_EQ(cli({"domineering", graph_file("p4.g6", named::path(4))}).out, "1 2 3\n");
  EXPECT_EQ(cli({"domineering", graph_file("c5.g6", named::cycle(5))}).out, "none\n");
}

TEST(Cli, StrategySynthJson) {
  const CliResult r = cli({"strategy", "synth", "--json", graph_file("star.g6", named::star(3))});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("depth"), 2);
  EXPECT_EQ(j.at("levels").at(0).at("kind"), "retract");
}

TEST(Cli, TranscriptReplayReproducesCopReplies) {
  // A 7-vertex graph whose plan nests at least three levels.
  std::optional<Graph> deep;
  enumerate_labeled_graphs(7, true).for_each(0, 200000, [&](std::uint64_t, const Graph& g) {
    if (!deep && is_p5_free(g) && synthesize(g).depth() >= 3) deep = g;
  });
  ASSERT_TRUE(deep);
  const std::string in = graph_file("g7.g6", *deep);
  for (const char* robber : {"optimal", "random", "greedy"}) {
    const std::string path = testing::TempDir() + "run_" + robber + ".json";
    const CliResult first = cli({"strategy", "run", "--robber", robber, "--seed", "5", "--transcript", path, in});
    ASSERT_EQ(first.code, kExitOk) << first.out;
    const CliResult again = cli({"strategy", "run", "--replay", path, "--json", in});
    ASSERT_EQ(again.code, kExitOk);
    const Json a = Json::parse(fixtures::slurp(path));
    const Json b = Json::parse(again.out);
    EXPECT_EQ(a.at("turns"), b.at("turns")) << robber;
  }
}

TEST(Cli, StrategyRunCapFailureExitsOne) {
  const CliResult r = cli({"strategy", "run", "--max-turns", "1", graph_file("p4long.g6", named::path(4))});
  EXPECT_TRUE(r.code == kExitOk || r.code == kExitFindings);
  const CliResult s = cli({"strategy", "run", "--robber", "optimal", "--max-turns", "1", graph_file("c4x.g6", named::star(4))});
  EXPECT_NE(s.out.find(s.code == kExitOk ? "captured" : "cap_failure"), std::string::npos);
}
