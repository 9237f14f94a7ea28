#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spld/config.hpp"
#include "spld/error.hpp"
#include "spld/generators.hpp"
#include "spld/io.hpp"
#include "support.hpp"

using namespace spld;
namespace fs = std::filesystem;

namespace {

IngestResult ingest_text(const std::string& text) {
  std::istringstream in(text);
  return ingest_edge_list(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("spld_io_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Ingest, MergesDirectedCopiesAndDropsLoops) {
  auto r = ingest_text("0 1\n1 0\n2 2\n");
  EXPECT_EQ(r.graph.node_count(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.report.self_loops_dropped, 1u);
  EXPECT_EQ(r.report.duplicates_dropped, 1u);
  EXPECT_EQ(r.report.raw_nodes, 3u);
  EXPECT_EQ(r.report.data_lines, 3u);
  EXPECT_EQ(r.original_id, (std::vector<std::int64_t>{0, 1}));
}

TEST(Ingest, CommentsExtraColumnsAndSparseIds) {
  auto r = ingest_text("# Directed graph\n# FromNodeId\tToNodeId\n10\t30 1.5 x\n30 7\n\n99 100\n");
  EXPECT_EQ(r.graph.node_count(), 3u);
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_EQ(r.original_id, (std::vector<std::int64_t>{7, 10, 30}));
  EXPECT_EQ(r.report.final_nodes, 3u);
  EXPECT_EQ(r.report.raw_nodes, 5u);
}

TEST(Ingest, MalformedLineCarriesLineNumber) {
  try {
    ingest_text("0 1\n# ok\n1 two\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(ingest_text("0 1\n5\n"), ParseError);
  EXPECT_THROW(ingest_text("# nothing\n"), ArgumentError);
  EXPECT_THROW(ingest_text("3 3\n"), ArgumentError);
}

TEST(Ingest, GeneratedGraphRoundTrips) {
  Graph g = gen_preferential_attachment(300, 3, 4);
  std::stringstream ss;
  write_edge_list(ss, g, "ba test");
  auto back = ingest_edge_list(ss);
  EXPECT_EQ(back.graph.edges(), g.edges());

  auto dir = scratch_dir("roundtrip");
  write_edge_list(dir / "g.txt", g);
  EXPECT_EQ(ingest_edge_list(dir / "g.txt").graph.edges(), g.edges());
  EXPECT_THROW(ingest_edge_list(dir / "missing.txt"), ArgumentError);
}

TEST(DyadCsv, RoundTrip) {
  DyadCsv t;
  t.meta["n"] = "40";
  t.meta["weight"] = "psi";
  t.dyads = {{1, 2, 1, SplSource::observed}, {1, 9, 3, SplSource::observed}};
  t.multiplicity = {2.0, 6.0};
  t.weight = {0.001234567890123456, 1.0 / 3.0};
  std::stringstream ss;
  write_dyad_csv(ss, t);
  auto back = read_dyad_csv(ss);
  EXPECT_EQ(back.meta, t.meta);
  ASSERT_EQ(back.dyads.size(), 2u);
  EXPECT_EQ(back.dyads[1].j, 9u);
  EXPECT_EQ(back.dyads[1].spl, 3u);
  EXPECT_EQ(back.multiplicity, t.multiplicity);
  EXPECT_EQ(back.weight, t.weight);
}

TEST(DyadCsv, Malformed) {
  std::istringstream bad_header("a,b\n");
  EXPECT_THROW(read_dyad_csv(bad_header), ParseError);
  std::istringstream bad_row("i,j,spl,multiplicity,weight\n1,2,x,1,1\n");
  try {
    read_dyad_csv(bad_row);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Config, ParseOverrideAndEcho) {
  std::istringstream in(
      "# demo\nname = demo\ngenerator = configuration_gamma\nn = 800\nshape = 0.125\nscale = 40\n"
      "beta = 0.2  # budget\nwalkers = 2\nestimators = UW, GHH_ratio\nspl_method = observed\n"
      "replicates = 5\nseed = 42\n");
  auto cfg = parse_config(in);
  EXPECT_EQ(cfg.generator, "configuration_gamma");
  EXPECT_EQ(cfg.n, 800u);
  EXPECT_DOUBLE_EQ(cfg.shape, 0.125);
  EXPECT_EQ(cfg.design.walkers, 2u);
  EXPECT_EQ(cfg.design.kinds, (std::vector<EstimatorKind>{EstimatorKind::uw, EstimatorKind::ghh_ratio}));
  EXPECT_EQ(cfg.design.spl_method, SplMethod::observed);
  EXPECT_NO_THROW(validate(cfg));

  std::vector<std::string> overrides{"seed=7", "gamma=0.5", "tau_method=approach2"};
  apply_overrides(cfg, overrides);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_DOUBLE_EQ(cfg.design.gamma, 0.5);
  EXPECT_EQ(cfg.design.tau, TauMethod::approach2);

  std::stringstream echo;
  write_config(echo, cfg);
  auto again = parse_config(echo);
  EXPECT_EQ(config_entries(again), config_entries(cfg));
}

TEST(Config, Errors) {
  std::istringstream unknown("beta = 0.2\nwidth = 3\n");
  try {
    parse_config(unknown);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream no_eq("beta 0.2\n");
  EXPECT_THROW(parse_config(no_eq), ParseError);

  ExperimentConfig cfg;
  EXPECT_THROW(validate(cfg), ArgumentError);  // no input
  cfg.generator = "preferential_attachment";
  cfg.edge_list = "x.txt";
  EXPECT_THROW(validate(cfg), ArgumentError);  // two inputs
  cfg.edge_list.clear();
  cfg.n = 100;
  cfg.m = 2;
  EXPECT_NO_THROW(validate(cfg));
  for (const char* bad : {"beta=1", "beta=0", "gamma=0", "gamma=1.5", "walkers=0", "replicates=0", "estimators="}) {
    ExperimentConfig c = cfg;
    std::vector<std::string> o{bad};
    apply_overrides(c, o);
    EXPECT_THROW(validate(c), ArgumentError) << bad;
  }
  std::vector<std::string> junk{"spl_method=magic"};
  EXPECT_THROW(apply_overrides(cfg, junk), ArgumentError);
}

TEST(RunExperiment, TinyGraphCompletesAndIsDeterministic) {
  auto dir = scratch_dir("run");
  write_edge_list(dir / "tri.txt", test::triangle());
  ExperimentConfig cfg;
  cfg.edge_list = dir / "tri.txt";
  cfg.design.beta = 0.9;
  cfg.replicates = 1;
  cfg.output_dir = dir / "a";
  std::ostringstream log;
  ASSERT_EQ(run_experiment(cfg, log), 0) << log.str();
  auto j = nlohmann::json::parse(slurp(dir / "a" / "result.json"));
  EXPECT_EQ(j["status"], "complete");
  EXPECT_EQ(j["config"]["edge_list"], (dir / "tri.txt").string());
  EXPECT_TRUE(fs::exists(dir / "a" / "per_l_GHH_ratio.csv"));

  Graph g = gen_preferential_attachment(300, 3, 1);
  write_edge_list(dir / "ba.txt", g);
  cfg.edge_list = dir / "ba.txt";
  cfg.design.beta = 0.2;
  cfg.replicates = 4;
  cfg.output_dir = dir / "b1";
  ASSERT_EQ(run_experiment(cfg, log), 0) << log.str();
  cfg.output_dir = dir / "b2";
  ASSERT_EQ(run_experiment(cfg, log), 0) << log.str();
  auto first = nlohmann::json::parse(slurp(dir / "b1" / "result.json"));
  auto second = nlohmann::json::parse(slurp(dir / "b2" / "result.json"));
  first["config"].erase("output_dir");
  second["config"].erase("output_dir");
  EXPECT_EQ(first.dump(), second.dump());
  EXPECT_EQ(slurp(dir / "b1" / "per_l_HT_ratio.csv"), slurp(dir / "b2" / "per_l_HT_ratio.csv"));
  EXPECT_EQ(first["estimators"]["GHH_ratio"]["per_l"].size(), first["truth"].size());
}

TEST(RunExperiment, FailureIsMarked) {
  auto dir = scratch_dir("fail");
  ExperimentConfig cfg;
  cfg.generator = "preferential_attachment";
  cfg.n = 20;
  cfg.m = 2;
  cfg.design.beta = 0.05;  // one step per walk
  cfg.output_dir = dir;
  std::ostringstream log;
  EXPECT_NE(run_experiment(cfg, log), 0);
  auto j = nlohmann::json::parse(slurp(dir / "result.json"));
  EXPECT_EQ(j["status"], "failed");
  EXPECT_FALSE(j["error"].get<std::string>().empty());
}
