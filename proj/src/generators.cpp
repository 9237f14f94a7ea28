#include "spld/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "spld/error.hpp"
#include "spld/rng.hpp"

namespace spld {

DegreeStats degree_moments(const Graph& g) {
  DegreeStats s;
  const std::size_t n = g.node_count();
  if (n == 0) return s;
  double k1 = 0.0;
  double k2 = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const double k = static_cast<double>(g.degree(v));
    k1 += k;
    k2 += k * k;
  }
  s.mean = k1 / static_cast<double>(n);
  s.second_moment = k2 / static_cast<double>(n);
  const double var = std::max(0.0, s.second_moment - s.mean * s.mean);
  s.cv = s.mean > 0.0 ? std::sqrt(var) / s.mean : 0.0;
  return s;
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("gen_erdos_renyi: p must lie in (0, 1)");
  if (n < 2) throw ArgumentError("gen_erdos_renyi: need n >= 2");
  Rng rng = make_rng(seed, 0);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_preferential_attachment(std::size_t n, std::size_t m_attach, std::size_t m0,
                                  std::uint64_t seed) {
  if (m_attach < 1 || m_attach > m0 || m0 >= n) {
    throw ArgumentError("gen_preferential_attachment: need 1 <= m_attach <= m0 < n (got m_attach=" +
                        std::to_string(m_attach) + ", m0=" + std::to_string(m0) +
                        ", n=" + std::to_string(n) + ")");
  }
  Rng rng = make_rng(seed, 0);
  std::vector<Edge> edges;
  edges.reserve(m0 + (n - m0) * m_attach);
  // One entry per edge endpoint: uniform draws from it are degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());

  if (m0 == 2) {
    edges.push_back({0, 1});
  } else if (m0 >= 3) {
    for (NodeId i = 0; i < m0; ++i) edges.push_back({i, static_cast<NodeId>((i + 1) % m0)});
  }
  for (const Edge& e : edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }

  std::vector<NodeId> targets;
  std::vector<char> chosen(n, 0);
  for (NodeId v = static_cast<NodeId>(m0); v < n; ++v) {
    targets.clear();
    while (targets.size() < m_attach) {
      NodeId t;
      if (endpoints.empty()) {
        // Single isolated seed node: no degree mass yet, fall back to uniform.
        t = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
      } else {
        t = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
      }
      if (chosen[t]) continue;
      chosen[t] = 1;
      targets.push_back(t);
    }
    for (NodeId t : targets) {
      chosen[t] = 0;
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

ConfigurationModel gen_configuration_gamma(std::size_t n, double shape, double scale,
                                           std::uint64_t seed) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw ArgumentError("gen_configuration_gamma: shape and scale must be positive");
  }
  if (n < 3) throw ArgumentError("gen_configuration_gamma: need n >= 3");

  Rng rng = make_rng(seed, 0);
  std::gamma_distribution<double> gamma(shape, scale);
  const auto cap = static_cast<double>(n - 1);
  std::vector<std::uint32_t> degree(n);
  std::uint64_t sum = 0;
  for (auto& k : degree) {
    const double draw = std::round(gamma(rng) + 1.0);
    k = static_cast<std::uint32_t>(std::clamp(draw, 1.0, cap));
    sum += k;
  }
  if (sum % 2 == 1) {
    // Lowest-id node among those of minimum degree absorbs the parity fix.
    auto it = std::min_element(degree.begin(), degree.end());
    ++*it;
  }

  std::vector<NodeId> stubs;
  for (NodeId v = 0; v < n; ++v) stubs.insert(stubs.end(), degree[v], v);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});

  BuildReport report;
  Graph multigraph = Graph::from_edges(n, edges, &report);

  ConfigurationModel out;
  out.requested_nodes = n;
  out.self_loops_erased = report.self_loops_dropped;
  out.multi_edges_erased = report.duplicates_dropped;
  out.graph = largest_connected_component(multigraph).graph;
  out.retained_fraction = static_cast<double>(out.graph.node_count()) / static_cast<double>(n);
  return out;
}

}  // namespace spld
