#include "spld/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spld/error.hpp"

namespace spld {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, BuildReport* report) {
  BuildReport local;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw ArgumentError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                          ") references a node outside 0.." + std::to_string(node_count));
    }
    if (e.u == e.v) {
      ++local.self_loops_dropped;
      continue;
    }
    kept.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto last = std::unique(kept.begin(), kept.end());
  local.duplicates_dropped = static_cast<std::size_t>(kept.end() - last);
  kept.erase(last, kept.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& e : kept) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(kept.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : kept) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  if (report) *report = local;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> k(node_count());
  for (NodeId v = 0; v < node_count(); ++v) k[v] = static_cast<std::uint32_t>(degree(v));
  return k;
}

void bfs_into(const Graph& g, NodeId source, std::vector<std::int32_t>& dist,
              std::vector<NodeId>& queue) {
  const std::size_t n = g.node_count();
  if (source >= n) {
    throw ArgumentError("BFS source " + std::to_string(source) + " is not a node of a graph with " +
                        std::to_string(n) + " nodes");
  }
  dist.assign(n, DistanceArray::kUnreachable);
  queue.resize(n);
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const NodeId u = queue[head++];
    const std::int32_t next = dist[u] + 1;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == DistanceArray::kUnreachable) {
        dist[v] = next;
        queue[tail++] = v;
      }
    }
  }
}

DistanceArray bfs_sssp(const Graph& g, NodeId source) {
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
  bfs_into(g, source, dist, queue);
  return DistanceArray(std::move(dist));
}

std::vector<double> SpldHistogram::fractions() const {
  std::vector<double> f(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    f[i] = total == 0 ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return f;
}

SpldHistogram exact_spld(const Graph& g) {
  const std::size_t n = g.node_count();
  SpldHistogram h;
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    bfs_into(g, s, dist, queue);
    for (NodeId t = s + 1; t < n; ++t) {
      const std::int32_t d = dist[t];
      if (d == DistanceArray::kUnreachable) {
        throw PreconditionError("graph is disconnected: no path between nodes " +
                                std::to_string(s) + " and " + std::to_string(t));
      }
      if (static_cast<std::size_t>(d) > h.counts.size()) h.counts.resize(d, 0);
      ++h.counts[d - 1];
    }
  }
  h.total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  return h;
}

namespace {

// Component label per node, labels assigned in order of smallest member id.
std::vector<std::uint32_t> component_labels(const Graph& g, std::uint32_t& count) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> label(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<NodeId> stack;
  count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (label[v] == std::numeric_limits<std::uint32_t>::max()) {
          label[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

Graph induced_on(const Graph& g, std::span<const NodeId> sorted_nodes) {
  std::vector<NodeId> old_to_new(g.node_count(), kNoNode);
  for (std::size_t i = 0; i < sorted_nodes.size(); ++i) {
    old_to_new[sorted_nodes[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  for (NodeId u : sorted_nodes) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && old_to_new[v] != kNoNode) edges.push_back({old_to_new[u], old_to_new[v]});
    }
  }
  return Graph::from_edges(sorted_nodes.size(), edges);
}

ComponentExtraction largest_connected_component(const Graph& g) {
  if (g.node_count() == 0) throw ArgumentError("largest_connected_component: empty graph");
  std::uint32_t count = 0;
  auto label = component_labels(g, count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : label) ++sizes[c];
  // Labels follow smallest member id, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ComponentExtraction out;
  out.old_to_new.assign(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (label[v] == best) {
      out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  out.graph = induced_on(g, out.new_to_old);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  std::uint32_t count = 0;
  component_labels(g, count);
  return count == 1;
}

bool has_triangle(const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // Sorted-list intersection restricted to w > v.
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
      }
    }
  }
  return false;
}

double mean_length(const SpldHistogram& h) {
  double m = 0.0;
  for (std::uint32_t l = 1; l <= h.max_length(); ++l) m += l * h.fraction(l);
  return m;
}

double mean_distance(const Graph& g) { return mean_length(exact_spld(g)); }

std::uint32_t diameter(const Graph& g) {
  auto h = exact_spld(g);
  std::uint32_t d = 0;
  for (std::uint32_t l = 1; l <= h.max_length(); ++l) {
    if (h.count(l) > 0) d = l;
  }
  return d;
}

}  // namespace spld
