#pragma once

#include <cstddef>
#include <cstdint>

#include "spld/graph.hpp"

namespace spld {

struct DegreeStats {
  double mean = 0.0;           // <k>
  double second_moment = 0.0;  // <k^2>
  double cv = 0.0;             // sqrt(<k^2> - <k>^2) / <k>
};

DegreeStats degree_moments(const Graph& g);

// G(n, p): every dyad is an edge independently with probability p.
Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Growth with linear preferential attachment from a ring of `m0` seed nodes.
// Each new node links to `m_attach` distinct existing nodes, drawn one at a
// time with probability proportional to current degree.
Graph gen_preferential_attachment(std::size_t n, std::size_t m_attach, std::size_t m0,
                                  std::uint64_t seed);

inline Graph gen_preferential_attachment(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  return gen_preferential_attachment(n, m_attach, m_attach, seed);
}

struct ConfigurationModel {
  Graph graph;                     // largest connected component, relabelled
  std::size_t requested_nodes = 0;
  std::size_t self_loops_erased = 0;
  std::size_t multi_edges_erased = 0;
  double retained_fraction = 0.0;  // graph.node_count() / requested_nodes
};

// Erased configuration model over degrees round(Gamma(shape, scale) + 1),
// floored at 1 and capped at n - 1.
ConfigurationModel gen_configuration_gamma(std::size_t n, double shape, double scale,
                                           std::uint64_t seed);

}  // namespace spld
