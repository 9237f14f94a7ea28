#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "spld/error.hpp"
#include "spld/generators.hpp"
#include "support.hpp"

using namespace spld;

TEST(DegreeMoments, Examples) {
  auto t = degree_moments(test::triangle());
  EXPECT_DOUBLE_EQ(t.mean, 2.0);
  EXPECT_DOUBLE_EQ(t.second_moment, 4.0);
  EXPECT_DOUBLE_EQ(t.cv, 0.0);

  auto s = degree_moments(test::star3());
  EXPECT_DOUBLE_EQ(s.mean, 1.5);
  EXPECT_DOUBLE_EQ(s.second_moment, 3.0);
  EXPECT_NEAR(s.cv, std::sqrt(0.75) / 1.5, 1e-12);
  EXPECT_NEAR(s.cv, 0.5774, 1e-4);

  auto p = degree_moments(test::path3());
  EXPECT_NEAR(p.mean, 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(p.cv, 0.3536, 1e-4);
  EXPECT_GE(p.second_moment, p.mean * p.mean - 1e-12);
}

TEST(ErdosRenyi, RejectsBadP) {
  EXPECT_THROW(gen_erdos_renyi(10, 0.0, 1), ArgumentError);
  EXPECT_THROW(gen_erdos_renyi(10, 1.0, 1), ArgumentError);
  EXPECT_THROW(gen_erdos_renyi(2, 1.5, 1), ArgumentError);
}

TEST(ErdosRenyi, NearOneAlmostAlwaysConnectsPair) {
  int present = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) present += gen_erdos_renyi(2, 0.999999, seed).edge_count();
  EXPECT_GE(present, 199);
}

TEST(ErdosRenyi, MeanDegreeWithinBinomialBand) {
  Graph g = gen_erdos_renyi(100, 0.06, 11);
  const double mean = degree_moments(g).mean;
  EXPECT_GE(mean, 4.5);
  EXPECT_LE(mean, 7.4);
}

TEST(ErdosRenyi, Deterministic) {
  EXPECT_EQ(gen_erdos_renyi(200, 0.05, 3).edges(), gen_erdos_renyi(200, 0.05, 3).edges());
  EXPECT_NE(gen_erdos_renyi(200, 0.05, 3).edges(), gen_erdos_renyi(200, 0.05, 4).edges());
}

TEST(ErdosRenyi, PoissonDispersion) {
  const std::size_t n = 5000;
  Graph g = gen_erdos_renyi(n, 6.0 / (n - 1), 21);
  auto d = degree_moments(g);
  const double var = d.second_moment - d.mean * d.mean;
  EXPECT_NEAR(var / d.mean, 1.0, 0.15);
}

TEST(PreferentialAttachment, ForcedChoice) {
  Graph g = gen_preferential_attachment(5, 4, 4, 9);
  for (NodeId v = 0; v < 4; ++v) EXPECT_TRUE(g.has_edge(v, 4));
  EXPECT_EQ(g.degree(4), 4u);
}

TEST(PreferentialAttachment, RejectsBadParameters) {
  EXPECT_THROW(gen_preferential_attachment(10, 0, 3, 1), ArgumentError);
  EXPECT_THROW(gen_preferential_attachment(10, 4, 3, 1), ArgumentError);
  EXPECT_THROW(gen_preferential_attachment(3, 3, 3, 1), ArgumentError);
}

TEST(PreferentialAttachment, HeavyTailOverSeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_preferential_attachment(1000, 3, seed);
    auto d = degree_moments(g);
    auto deg = g.degrees();
    EXPECT_GT(d.cv, 1.0) << "seed " << seed;
    EXPECT_GT(*std::max_element(deg.begin(), deg.end()), 10.0 * d.mean) << "seed " << seed;
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.edge_count(), 3u + 997u * 3u);
  }
}

TEST(PreferentialAttachment, DeterministicAndSmallSeeds) {
  EXPECT_EQ(gen_preferential_attachment(300, 2, 7).edges(), gen_preferential_attachment(300, 2, 7).edges());
  EXPECT_TRUE(is_connected(gen_preferential_attachment(50, 1, 1, 4)));
  EXPECT_TRUE(is_connected(gen_preferential_attachment(50, 1, 2, 4)));
}

TEST(ConfigurationGamma, HeavyAndLightShapes) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto heavy = gen_configuration_gamma(5000, 0.125, 40.0, seed);
    EXPECT_NEAR(degree_moments(heavy.graph).cv, 2.4, 0.4) << "seed " << seed;
    EXPECT_GE(heavy.retained_fraction, 0.9);
    EXPECT_TRUE(is_connected(heavy.graph));

    auto light = gen_configuration_gamma(5000, 1.0, 5.0, seed);
    EXPECT_NEAR(degree_moments(light.graph).cv, 0.8, 0.2) << "seed " << seed;
    EXPECT_GE(light.retained_fraction, 0.9);
  }
}

TEST(ConfigurationGamma, ValidSimpleGraphAndErasureCounts) {
  auto cm = gen_configuration_gamma(2000, 0.125, 40.0, 5);
  const Graph& g = cm.graph;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId u : g.neighbors(v)) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
  }
  EXPECT_GT(cm.self_loops_erased + cm.multi_edges_erased, 0u);
  EXPECT_EQ(cm.requested_nodes, 2000u);
  EXPECT_EQ(gen_configuration_gamma(500, 1.0, 5.0, 8).graph.edges(),
            gen_configuration_gamma(500, 1.0, 5.0, 8).graph.edges());
  EXPECT_THROW(gen_configuration_gamma(2, 1.0, 1.0, 1), ArgumentError);
  EXPECT_THROW(gen_configuration_gamma(10, 0.0, 1.0, 1), ArgumentError);
}
