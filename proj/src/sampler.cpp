#include "spld/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "spld/error.hpp"
#include "spld/rng.hpp"

namespace spld {

std::uint64_t WalkSample::sample_size() const noexcept {
  std::uint64_t s = 0;
  for (const auto& w : walks) s += w.size();
  return s;
}

std::uint64_t WalkSample::dyad_sample_size() const noexcept {
  const std::uint64_t s = sample_size();
  std::uint64_t total = s * (s - (s > 0 ? 1 : 0)) / 2;
  for (NodeId i : distinct_nodes) {
    const std::uint64_t q = visit_counts[i];
    total -= q * (q - 1) / 2;
  }
  return total;
}

std::size_t steps_per_walk(std::size_t n, std::size_t walkers, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ArgumentError("sampling budget beta must lie in (0, 1)");
  if (walkers < 1) throw ArgumentError("need at least one walker");
  const double exact = beta * static_cast<double>(n) / static_cast<double>(walkers);
  if (exact < 2.0) {
    throw ArgumentError("budget too small: beta*n/H = " + std::to_string(exact) +
                        " steps per walk, need at least 2");
  }
  return static_cast<std::size_t>(std::llround(exact));
}

WalkSample run_walks_with_length(const Graph& g, std::size_t walkers, std::size_t steps,
                                 std::uint64_t seed, std::size_t burn_in) {
  const std::size_t n = g.node_count();
  if (walkers < 1) throw ArgumentError("need at least one walker");
  if (steps < 1) throw ArgumentError("walk length must be positive");
  if (walkers > n) throw ArgumentError("more walkers than nodes: starts must be distinct");
  if (!is_connected(g)) throw PreconditionError("random walks require a connected graph");

  // Distinct start nodes: partial Fisher-Yates on the master stream.
  Rng master = make_rng(seed, 0);
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[v] = v;
  for (std::size_t h = 0; h < walkers; ++h) {
    std::uniform_int_distribution<std::size_t> pick(h, n - 1);
    std::swap(order[h], order[pick(master)]);
  }

  WalkSample ws;
  ws.population_nodes = n;
  ws.walks.resize(walkers);
  ws.visit_counts.assign(n, 0);
  for (std::size_t h = 0; h < walkers; ++h) {
    Rng rng = make_rng(seed, h + 1);
    NodeId cur = order[h];
    auto step = [&] {
      auto nb = g.neighbors(cur);
      cur = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    };
    for (std::size_t b = 0; b < burn_in; ++b) step();
    auto& seq = ws.walks[h];
    seq.resize(steps);
    seq[0] = cur;
    for (std::size_t b = 1; b < steps; ++b) {
      step();
      seq[b] = cur;
    }
  }
  // Deterministic merge in walker order.
  for (const auto& seq : ws.walks) {
    for (NodeId v : seq) ++ws.visit_counts[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (ws.visit_counts[v] > 0) ws.distinct_nodes.push_back(v);
  }
  return ws;
}

WalkSample run_walks(const Graph& g, std::size_t walkers, double beta, std::uint64_t seed,
                     std::size_t burn_in) {
  return run_walks_with_length(g, walkers, steps_per_walk(g.node_count(), walkers, beta), seed,
                               burn_in);
}

InducedSubgraph induced_subgraph(const Graph& g, const WalkSample& ws) {
  for (NodeId v : ws.distinct_nodes) {
    if (v >= g.node_count()) {
      throw ConsistencyError("sampled node " + std::to_string(v) +
                             " is outside the parent graph (n=" + std::to_string(g.node_count()) +
                             ")");
    }
  }
  InducedSubgraph out;
  out.sub_to_parent = ws.distinct_nodes;
  out.parent_to_sub.assign(g.node_count(), kNoNode);
  for (std::size_t a = 0; a < out.sub_to_parent.size(); ++a) {
    out.parent_to_sub[out.sub_to_parent[a]] = static_cast<NodeId>(a);
  }
  out.subgraph = induced_on(g, out.sub_to_parent);
  out.parent_edges = g.edge_count();
  return out;
}

std::vector<DyadMultiplicity> dyad_multiplicities(const WalkSample& ws) {
  const auto& s = ws.distinct_nodes;
  std::vector<DyadMultiplicity> out;
  out.reserve(s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2);
  for (std::size_t a = 0; a < s.size(); ++a) {
    const std::uint64_t qa = ws.visit_counts[s[a]];
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      out.push_back({s[a], s[b], qa * ws.visit_counts[s[b]]});
    }
  }
  return out;
}

}  // namespace spld
