#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "p4d/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "p4d");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = p4d::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("p4d_cli_" + name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, BoundsReport) {
  auto r = run({"bounds", "--n", "100", "--e", "2475"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dominant        clique"), std::string::npos);
}

TEST(Cli, BoundsNeedsArguments) { EXPECT_EQ(run({"bounds", "--n", "10"}).code, 1); }

TEST(Cli, BoundsInvalidEdgeCount) { EXPECT_EQ(run({"bounds", "--n", "4", "--e", "7"}).code, 1); }

TEST(Cli, BoundsSweepCsv) {
  const auto path = temp_file("sweep.csv");
  auto r = run({"bounds", "--sweep", "--points", "11", "--csv", path.string()});
  EXPECT_EQ(r.code, 0);
  auto text = slurp(path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 12);
  EXPECT_EQ(text.rfind("c,lower,upper_star,upper_clique,dominant\n", 0), 0u);
  fs::remove(path);
}

TEST(Cli, VerifyAk) {
  auto r = run({"verify-ak", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS 16/16 edge counts"), std::string::npos);
}

TEST(Cli, CountMissingFile) {
  auto r = run({"count", "--input", "missing.txt"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, UnknownSubcommand) { EXPECT_EQ(run({"frobnicate"}).code, 1); }

TEST(Cli, UnknownFlag) { EXPECT_EQ(run({"bounds", "--bogus"}).code, 1); }

TEST(Cli, ConstructThenCount) {
  auto c = run({"construct", "--kind", "quasi-clique", "--n", "5", "--e", "10"});
  ASSERT_EQ(c.code, 0);
  const auto graph = temp_file("k5.txt");
  const auto csv = temp_file("k5.csv");
  std::ofstream(graph) << c.out;
  auto r = run({"count", "--input", graph.string(), "--k", "3", "--csv", csv.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p4              60"), std::string::npos);
  EXPECT_NE(r.out.find("kstar_3         20"), std::string::npos);
  EXPECT_EQ(slurp(csv), "n,e,c,p2,p4,walks4,hom_density_p4,kstar_3\n5,10,0.8,30,60,1280,0.4096,20\n");
  fs::remove(graph);
  fs::remove(csv);
}

TEST(Cli, ConstructRejectsBadKind) { EXPECT_EQ(run({"construct", "--kind", "ring", "--n", "5", "--e", "3"}).code, 1); }

TEST(Cli, SearchPrintsWitness) {
  auto r = run({"search", "--n", "5", "--e", "4", "--stat", "p4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max             1\n"), std::string::npos);
  const auto key = p4d::canonical_key(p4d::path_graph(5));
  std::string line = "witness " + key.hex() + " :";
  const auto path = p4d::decode(key);
  for (auto [u, v] : path.edges()) line += " " + std::to_string(u) + "-" + std::to_string(v);
  EXPECT_NE(r.out.find(line + "\n"), std::string::npos) << r.out;
}

TEST(Cli, OptimizeWritesTrace) {
  const auto trace = temp_file("trace.csv");
  auto r = run({"optimize", "--c", "0.3", "--blocks", "4", "--restarts", "2", "--trace", trace.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(slurp(trace).rfind("iter,move_kind,s_value,t_value,mass\n0,init,", 0), 0u);
  fs::remove(trace);
}

TEST(Cli, OptimizeRejectsBadDensity) { EXPECT_EQ(run({"optimize", "--c", "1.5"}).code, 1); }

TEST(Cli, P4TableToStdout) {
  auto r = run({"p4-table", "--n-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind(p4d::kTableHeader, 0), 0u);
}

TEST(Cli, VerifyAllNegativeControl) {
  const auto cfg = temp_file("neg.cfg");
  std::ofstream(cfg) << "n_max = 4\nrandom_graphs = 20\nstepfun_samples = 100\ntolerance = 0\n";
  auto r = run({"--config", cfg.string(), "verify-all"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  fs::remove(cfg);
}

TEST(Cli, VerifyAllSmall) {
  auto r = run({"verify-all", "--n-max", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}

TEST(Cli, ConfigFillsUnsetFlags) {
  const auto cfg = temp_file("table.cfg");
  std::ofstream(cfg) << "n-max = 3\n";
  auto r = run({"--config", cfg.string(), "p4-table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("\n4,"), std::string::npos);
  EXPECT_NE(r.out.find("\n3,"), std::string::npos);
  fs::remove(cfg);
}
