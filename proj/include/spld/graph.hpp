#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace spld {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Counts of input edges discarded while building a simple graph.
struct BuildReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Nodes are 0..n-1 and every adjacency list is sorted by node id, so any
/// traversal that iterates neighbours in order is reproducible under a fixed
/// seed. Self-loops and repeated edges (in either orientation) are dropped at
/// construction and counted in the optional BuildReport.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          BuildReport* report = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<std::uint32_t> degrees() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Hop distances from one BFS source. Unreachable nodes hold an explicit
/// marker rather than a large number; callers ask `reachable(v)` or go through
/// `at(v)`.
class DistanceArray {
 public:
  static constexpr std::int32_t kUnreachable = -1;

  DistanceArray() = default;
  explicit DistanceArray(std::vector<std::int32_t> hops) : hops_(std::move(hops)) {}

  std::size_t size() const noexcept { return hops_.size(); }
  bool reachable(NodeId v) const noexcept { return hops_[v] != kUnreachable; }
  std::optional<std::uint32_t> at(NodeId v) const noexcept {
    if (!reachable(v)) return std::nullopt;
    return static_cast<std::uint32_t>(hops_[v]);
  }
  std::span<const std::int32_t> raw() const noexcept { return hops_; }

 private:
  std::vector<std::int32_t> hops_;
};

DistanceArray bfs_sssp(const Graph& g, NodeId source);

// Allocation-free variant for hot loops; `dist` and `queue` are resized as
// needed and reused between calls. Unreached entries are set to
// DistanceArray::kUnreachable.
void bfs_into(const Graph& g, NodeId source, std::vector<std::int32_t>& dist,
              std::vector<NodeId>& queue);

/// Counts N_l of unordered dyads per shortest-path length l >= 1.
struct SpldHistogram {
  std::vector<std::uint64_t> counts;  // counts[l - 1] = N_l
  std::uint64_t total = 0;            // N

  std::uint32_t max_length() const noexcept { return static_cast<std::uint32_t>(counts.size()); }
  std::uint64_t count(std::uint32_t l) const noexcept {
    return (l >= 1 && l <= counts.size()) ? counts[l - 1] : 0;
  }
  double fraction(std::uint32_t l) const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(count(l)) / static_cast<double>(total);
  }
  std::vector<double> fractions() const;
};

// Exact SPLD from n BFS runs. Throws PreconditionError naming an unreachable
// pair when the graph is disconnected.
SpldHistogram exact_spld(const Graph& g);

struct ComponentExtraction {
  Graph graph;
  std::vector<NodeId> old_to_new;  // kNoNode for nodes outside the component
  std::vector<NodeId> new_to_old;
};

// Largest component, relabelled 0..n'-1 preserving the relative order of the
// original ids. Ties go to the component holding the smallest original id.
ComponentExtraction largest_connected_component(const Graph& g);

Graph induced_on(const Graph& g, std::span<const NodeId> sorted_nodes);

bool is_connected(const Graph& g);
bool has_triangle(const Graph& g);

double mean_distance(const Graph& g);
std::uint32_t diameter(const Graph& g);
double mean_length(const SpldHistogram& h);

}  // namespace spld
