#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spld/graph.hpp"

namespace spld {

/// Pooled output of H random walks.
///
/// `walks[h]` is the recorded node sequence of walker h (its start node is
/// the first entry). `visit_counts[i]` is q_i, the number of appearances of
/// node i across all walks, and `distinct_nodes` is s*, sorted by id.
struct WalkSample {
  std::size_t population_nodes = 0;  // n of the graph the walks ran on
  std::vector<std::vector<NodeId>> walks;
  std::vector<std::uint64_t> visit_counts;
  std::vector<NodeId> distinct_nodes;

  // |s| = H * B
  std::uint64_t sample_size() const noexcept;
  // |S| = C(|s|, 2) - sum_i C(q_i, 2): ordered-free dyads of distinct nodes, with duplicates
  std::uint64_t dyad_sample_size() const noexcept;
  double distinct_fraction() const noexcept {
    return population_nodes == 0 ? 0.0
                                 : static_cast<double>(distinct_nodes.size()) /
                                       static_cast<double>(population_nodes);
  }
};

// Steps per walk for a total budget beta * n split across H walkers.
std::size_t steps_per_walk(std::size_t n, std::size_t walkers, double beta);

// H walks from distinct uniformly drawn start nodes, each recording `steps`
// nodes after discarding `burn_in` leading moves. Walker h draws from its own
// stream derived from (seed, h).
WalkSample run_walks_with_length(const Graph& g, std::size_t walkers, std::size_t steps,
                                 std::uint64_t seed, std::size_t burn_in = 0);

// Budgeted form: B = round(beta * n / H).
WalkSample run_walks(const Graph& g, std::size_t walkers, double beta, std::uint64_t seed,
                     std::size_t burn_in = 0);

struct InducedSubgraph {
  Graph subgraph;                  // over s*, node a <-> parent node sub_to_parent[a]
  std::vector<NodeId> sub_to_parent;
  std::vector<NodeId> parent_to_sub;  // kNoNode outside s*
  std::size_t parent_edges = 0;

  // E.f = |E*| / |E|
  double edge_fraction() const noexcept {
    return parent_edges == 0 ? 0.0
                             : static_cast<double>(subgraph.edge_count()) /
                                   static_cast<double>(parent_edges);
  }
};

InducedSubgraph induced_subgraph(const Graph& g, const WalkSample& ws);

struct DyadMultiplicity {
  NodeId i;
  NodeId j;
  std::uint64_t q;  // Q_r = q_i * q_j
};

// Every unordered pair of distinct visited nodes with its multiplicity Q_r.
std::vector<DyadMultiplicity> dyad_multiplicities(const WalkSample& ws);

}  // namespace spld
