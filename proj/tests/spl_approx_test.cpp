#include <gtest/gtest.h>

#include "spld/error.hpp"
#include "spld/generators.hpp"
#include "spld/spl_approx.hpp"
#include "support.hpp"

using namespace spld;

namespace {

std::vector<std::uint32_t> spl_column(const DyadSplTable& t) {
  std::vector<std::uint32_t> out;
  for (const auto& r : t.records) out.push_back(r.spl);
  return out;
}

WalkSample all_nodes(std::size_t n) { return test::sample_with_counts(std::vector<std::uint64_t>(n, 1)); }

}  // namespace

TEST(ObservedSpls, Triangle) {
  Graph tri = test::triangle();
  auto t = observed_spls(induced_subgraph(tri, all_nodes(3)));
  EXPECT_EQ(spl_column(t), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(t.omitted_dyads, 0u);
}

TEST(ObservedSpls, PathInsideTriangleOverestimates) {
  // Parent has the chord 0-2, but the sample only saw nodes {0, 1, 2} of a
  // square 0-1-2-3 plus chord; simplest: induced graph is a path when the
  // chord endpoints are joined only through the parent.
  Graph parent = test::make_graph(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  auto sub = induced_subgraph(parent, test::sample_with_counts({1, 1, 1, 0}));
  auto t = observed_spls(sub);
  ASSERT_EQ(t.records.size(), 3u);
  EXPECT_EQ(t.records[1].i, 0u);
  EXPECT_EQ(t.records[1].j, 2u);
  EXPECT_EQ(t.records[1].spl, 2u);

  Graph tri = test::triangle();
  InducedSubgraph fake;
  fake.subgraph = test::path3();
  fake.sub_to_parent = {0, 1, 2};
  auto obs = observed_spls(fake);
  auto diff = spl_difference_distribution(tri, obs);
  EXPECT_EQ(diff.by_true_spl.at(1), (std::vector<std::uint64_t>{2, 1}));
  EXPECT_EQ(diff.zero_difference, 2u);
}

TEST(ObservedSpls, OmitsDisconnectedPairs) {
  auto sub = induced_subgraph(test::path3(), test::sample_with_counts({1, 0, 1}));
  auto t = observed_spls(sub);
  EXPECT_TRUE(t.records.empty());
  EXPECT_EQ(t.omitted_dyads, 1u);
}

TEST(ObservedSpls, FullSampleEqualsOracle) {
  Graph g = test::random_connected(30, 20, 8);
  auto t = observed_spls(induced_subgraph(g, all_nodes(30)));
  auto d = test::all_pairs(g);
  std::size_t k = 0;
  for (NodeId i = 0; i < 30; ++i)
    for (NodeId j = i + 1; j < 30; ++j, ++k) EXPECT_EQ(t.records[k].spl, static_cast<std::uint32_t>(d[i][j]));
  auto diff = spl_difference_distribution(g, t);
  EXPECT_DOUBLE_EQ(diff.zero_fraction(), 1.0);
}

TEST(ObservedSpls, NeverBelowTruth) {
  Graph g = gen_preferential_attachment(400, 2, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto ws = run_walks(g, 1, 0.2, seed);
    auto t = observed_spls(induced_subgraph(g, ws));
    EXPECT_NO_THROW(spl_difference_distribution(g, t));
  }
}

TEST(SelectLandmarks, Examples) {
  Graph star = test::star3();
  auto ws = test::sample_with_counts({1, 1, 1, 0});
  EXPECT_EQ(select_landmarks(ws, star, 0.34), (std::vector<NodeId>{0}));

  Graph tri = test::triangle();
  EXPECT_EQ(select_landmarks(test::sample_with_counts({1, 1, 1}), tri, 0.67), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(select_landmarks(test::sample_with_counts({1, 1, 1}), tri, 1.0), (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(select_landmarks(test::sample_with_counts({1, 1, 1}), tri, 0.01).size(), 1u);

  EXPECT_THROW(select_landmarks(test::sample_with_counts({0, 0, 0}), tri, 0.5), PreconditionError);
  EXPECT_THROW(select_landmarks(test::sample_with_counts({1, 1, 1}), tri, 0.0), ArgumentError);
}

TEST(SelectLandmarks, SubsetOfSampleByDegree) {
  Graph g = gen_preferential_attachment(500, 3, 6);
  auto ws = run_walks(g, 1, 0.2, 1);
  auto d = select_landmarks(ws, g, 0.3);
  EXPECT_GE(d.size(), 1u);
  for (std::size_t k = 0; k < d.size(); ++k) {
    EXPECT_GT(ws.visit_counts[d[k]], 0u);
    if (k > 0) {
      EXPECT_GE(g.degree(d[k - 1]), g.degree(d[k]));
    }
  }
}

TEST(LandmarkIndex, Rows) {
  auto p = build_landmark_index(test::path3(), {1});
  auto row = p.row(0);
  EXPECT_EQ(std::vector<std::int32_t>(row.begin(), row.end()), (std::vector<std::int32_t>{1, 0, 1}));
  auto t = build_landmark_index(test::triangle(), {0});
  row = t.row(0);
  EXPECT_EQ(std::vector<std::int32_t>(row.begin(), row.end()), (std::vector<std::int32_t>{0, 1, 1}));

  Graph g = test::random_connected(25, 10, 4);
  auto idx = build_landmark_index(g, {3, 7, 11});
  for (std::size_t k = 0; k < idx.size(); ++k) EXPECT_EQ(idx.row(k)[idx.landmarks()[k]], 0);
  EXPECT_THROW(build_landmark_index(g, {}), ArgumentError);
}

TEST(LandmarkSpl, PathExamples) {
  Graph p = test::path3();  // a=0, b=1, c=2
  auto mid = landmark_spl(0, 2, build_landmark_index(p, {1}));
  EXPECT_EQ(mid.upper, 2u);

  auto end = landmark_spl(1, 2, build_landmark_index(p, {0}));
  EXPECT_EQ(end.upper, 3u);
  EXPECT_EQ(end.lower, 1u);

  auto self = landmark_spl(0, 2, build_landmark_index(p, {0}));
  EXPECT_EQ(self.upper, 2u);
  EXPECT_THROW(landmark_spl(1, 1, build_landmark_index(p, {0})), ArgumentError);
}

TEST(LandmarkSpl, BoundsAndEqualityOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t n = 10 + seed;
    Graph g = test::random_connected(n, n / 2, seed);
    auto d = test::all_pairs(g);
    std::vector<NodeId> lm;
    for (NodeId v = 0; v < n; v += 4) lm.push_back(v);
    auto idx = build_landmark_index(g, lm);
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId t = s + 1; t < n; ++t) {
        auto b = landmark_spl(s, t, idx);
        const auto truth = static_cast<std::uint32_t>(d[s][t]);
        EXPECT_LE(b.lower, truth);
        EXPECT_GE(b.upper, truth);
        auto on = test::nodes_on_shortest_paths(g, s, t, d[s][t]);
        bool any = false;
        for (NodeId j : lm) any = any || on[j];
        if (any) {
          EXPECT_EQ(b.upper, truth);
        }
      }
    }
  }
}

TEST(LandmarkSpls, TableMatchesPairwiseQuery) {
  Graph g = gen_preferential_attachment(300, 2, 5);
  auto ws = run_walks(g, 1, 0.2, 2);
  auto idx = build_landmark_index(g, select_landmarks(ws, g, 0.3));
  auto table = landmark_spls(idx, ws.distinct_nodes);
  const std::size_t s = ws.distinct_nodes.size();
  ASSERT_EQ(table.records.size(), s * (s - 1) / 2);
  for (const auto& r : table.records) {
    EXPECT_EQ(r.spl, landmark_spl(r.i, r.j, idx).upper);
    EXPECT_EQ(r.source, SplSource::landmark);
    EXPECT_GE(r.spl, 1u);
  }
}

TEST(SplDifference, ExactTableHasNoDifference) {
  Graph g = test::random_connected(20, 10, 1);
  std::vector<NodeId> nodes{0, 3, 5, 9, 12, 19};
  auto exact = exact_spls(g, nodes);
  auto diff = spl_difference_distribution(exact, exact);
  EXPECT_EQ(diff.zero_difference, diff.dyads);
  EXPECT_EQ(diff.dyads, 15u);
}

TEST(SplDifference, MissingOracleDyad) {
  DyadSplTable approx;
  approx.records.push_back({0, 1, 1, SplSource::observed});
  DyadSplTable truth;
  EXPECT_THROW(spl_difference_distribution(approx, truth), ConsistencyError);
}

TEST(Regime, ThresholdAndWarningBand) {
  EXPECT_TRUE(prefers_observed_spls(2.4));
  EXPECT_TRUE(prefers_observed_spls(2.0));
  EXPECT_FALSE(prefers_observed_spls(0.8));
  EXPECT_TRUE(in_cv_warning_band(1.9));
  EXPECT_FALSE(in_cv_warning_band(0.8));
  EXPECT_FALSE(in_cv_warning_band(7.6));
}
