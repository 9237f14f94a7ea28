#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "spld/graph.hpp"
#include "spld/rng.hpp"
#include "spld/sampler.hpp"

namespace spld::test {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> e(edges);
  return Graph::from_edges(n, e);
}

inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph cycle4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph two_edges() { return make_graph(4, {{0, 1}, {2, 3}}); }

// Random connected graph: a random spanning tree plus `extra` random chords.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng = make_rng(seed, 0);
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.push_back({order[i], order[pick(rng)]});
  }
  std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
  for (std::size_t k = 0; k < extra; ++k) edges.push_back({any(rng), any(rng)});
  return Graph::from_edges(n, edges);
}

// Any simple graph, possibly disconnected: each dyad present with probability p.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng = make_rng(seed, 1);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

inline constexpr int kInf = 1 << 28;

// Floyd-Warshall over the adjacency matrix; kInf marks unreachable pairs.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (NodeId i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (NodeId j : g.neighbors(i)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// N_l counts from the all-pairs matrix, index l - 1.
inline std::vector<std::uint64_t> brute_counts(const std::vector<std::vector<int>>& d) {
  std::vector<std::uint64_t> counts;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const int l = d[i][j];
      if (l >= kInf) continue;
      if (counts.size() < static_cast<std::size_t>(l)) counts.resize(l, 0);
      ++counts[l - 1];
    }
  }
  return counts;
}

// A sample with the given visit counts; the single "walk" lists each node
// q_i times, which is all the count-based code looks at.
inline WalkSample sample_with_counts(std::vector<std::uint64_t> counts) {
  WalkSample ws;
  ws.population_nodes = counts.size();
  ws.walks.emplace_back();
  for (NodeId v = 0; v < counts.size(); ++v) {
    ws.walks[0].insert(ws.walks[0].end(), counts[v], v);
    if (counts[v] > 0) ws.distinct_nodes.push_back(v);
  }
  ws.visit_counts = std::move(counts);
  return ws;
}

}  // namespace spld::test

namespace spld::test {

// Marks every node lying on at least one shortest s-t path, found by
// depth-limited enumeration of all simple s-t paths of length `len`.
inline std::vector<char> nodes_on_shortest_paths(const Graph& g, NodeId s, NodeId t, int len) {
  std::vector<char> on(g.node_count(), 0);
  std::vector<NodeId> path{s};
  std::vector<char> used(g.node_count(), 0);
  used[s] = 1;
  auto dfs = [&](auto&& self, NodeId v) -> void {
    if (static_cast<int>(path.size()) - 1 == len) {
      if (v == t)
        for (NodeId x : path) on[x] = 1;
      return;
    }
    for (NodeId u : g.neighbors(v)) {
      if (used[u]) continue;
      used[u] = 1;
      path.push_back(u);
      self(self, u);
      path.pop_back();
      used[u] = 0;
    }
  };
  dfs(dfs, s);
  return on;
}

}  // namespace spld::test
