#include "spld/spl_approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "spld/error.hpp"
#include "spld/kernels.hpp"

namespace spld {

std::string_view to_string(SplSource s) {
  switch (s) {
    case SplSource::observed: return "observed";
    case SplSource::landmark: return "landmark";
    case SplSource::exact: return "exact";
  }
  return "?";
}

DyadSplTable observed_spls(const InducedSubgraph& sub) {
  const Graph& h = sub.subgraph;
  const std::size_t m = h.node_count();
  if (m == 0) throw PreconditionError("observed_spls: empty induced subgraph");
  DyadSplTable table;
  table.records.reserve(m * (m - 1) / 2);
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
  for (NodeId a = 0; a < m; ++a) {
    bfs_into(h, a, dist, queue);
    for (NodeId b = a + 1; b < m; ++b) {
      if (dist[b] == DistanceArray::kUnreachable) {
        ++table.omitted_dyads;
        continue;
      }
      table.records.push_back({sub.sub_to_parent[a], sub.sub_to_parent[b],
                               static_cast<std::uint32_t>(dist[b]), SplSource::observed});
    }
  }
  return table;
}

DyadSplTable exact_spls(const Graph& g, std::span<const NodeId> nodes) {
  DyadSplTable table;
  table.records.reserve(nodes.size() * (nodes.size() - (nodes.empty() ? 0 : 1)) / 2);
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    bfs_into(g, nodes[a], dist, queue);
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const std::int32_t d = dist[nodes[b]];
      if (d == DistanceArray::kUnreachable) {
        ++table.omitted_dyads;
        continue;
      }
      table.records.push_back({nodes[a], nodes[b], static_cast<std::uint32_t>(d), SplSource::exact});
    }
  }
  return table;
}

std::vector<NodeId> select_landmarks(const WalkSample& ws, const Graph& g, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ArgumentError("landmark fraction gamma must lie in (0, 1]");
  if (ws.distinct_nodes.empty()) throw PreconditionError("select_landmarks: empty sample");
  std::vector<NodeId> ranked = ws.distinct_nodes;
  std::stable_sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
    const auto ka = g.degree(a);
    const auto kb = g.degree(b);
    return ka != kb ? ka > kb : a < b;
  });
  const double wanted = std::round(gamma * static_cast<double>(ranked.size()));
  const auto count = std::clamp<std::size_t>(static_cast<std::size_t>(wanted), 1, ranked.size());
  ranked.resize(count);
  return ranked;
}

LandmarkIndex build_landmark_index(const Graph& g, std::vector<NodeId> landmarks) {
  if (landmarks.empty()) throw ArgumentError("build_landmark_index: no landmarks");
  LandmarkIndex idx;
  idx.n_ = g.node_count();
  idx.rows_.resize(landmarks.size() * idx.n_);
  std::vector<std::int32_t> dist;
  std::vector<NodeId> queue;
  for (std::size_t k = 0; k < landmarks.size(); ++k) {
    bfs_into(g, landmarks[k], dist, queue);
    std::copy(dist.begin(), dist.end(), idx.rows_.begin() + static_cast<std::ptrdiff_t>(k * idx.n_));
  }
  idx.landmarks_ = std::move(landmarks);
  return idx;
}

SplBounds landmark_spl(NodeId s, NodeId t, const LandmarkIndex& idx) {
  if (s == t) throw ArgumentError("landmark_spl: s and t must differ");
  std::int64_t upper = INT64_MAX;
  std::int64_t lower = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto row = idx.row(k);
    const std::int64_t a = row[s];
    const std::int64_t b = row[t];
    if (a < 0 || b < 0) continue;  // landmark in another component
    upper = std::min(upper, a + b);
    lower = std::max(lower, std::abs(a - b));
  }
  if (upper == INT64_MAX) {
    throw PreconditionError("landmark_spl: no landmark reaches both " + std::to_string(s) +
                            " and " + std::to_string(t));
  }
  return {static_cast<std::uint32_t>(upper), static_cast<std::uint32_t>(lower)};
}

DyadSplTable landmark_spls(const LandmarkIndex& idx, std::span<const NodeId> nodes) {
  const std::size_t d = idx.size();
  const std::size_t width = kernels::padded_row_length(d);
  std::vector<std::int32_t> table(nodes.size() * width, kernels::kRowPad);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::int32_t h = idx.row(k)[nodes[a]];
      if (h < 0) throw PreconditionError("landmark_spls: population graph is disconnected");
      table[a * width + k] = h;
    }
  }

  const kernels::KernelTable& kt = kernels::active_kernels();
  DyadSplTable out;
  out.records.reserve(nodes.size() * (nodes.size() - (nodes.empty() ? 0 : 1)) / 2);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    const std::int32_t* ra = table.data() + a * width;
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const auto bounds = kt.landmark_bounds(ra, table.data() + b * width, width);
      out.records.push_back({nodes[a], nodes[b], static_cast<std::uint32_t>(bounds.upper),
                             SplSource::landmark});
    }
  }
  return out;
}

SplDifference spl_difference_distribution(const DyadSplTable& approx, const DyadSplTable& truth) {
  SplDifference out;
  auto it = truth.records.begin();
  for (const DyadSpl& r : approx.records) {
    while (it != truth.records.end() && (it->i < r.i || (it->i == r.i && it->j < r.j))) ++it;
    if (it == truth.records.end() || it->i != r.i || it->j != r.j) {
      throw ConsistencyError("oracle has no SPL for dyad (" + std::to_string(r.i) + ", " +
                             std::to_string(r.j) + ")");
    }
    if (r.spl < it->spl) {
      throw ConsistencyError("approximate SPL below the true SPL for dyad (" +
                             std::to_string(r.i) + ", " + std::to_string(r.j) + ")");
    }
    const std::uint32_t diff = r.spl - it->spl;
    auto& bins = out.by_true_spl[it->spl];
    if (bins.size() <= diff) bins.resize(diff + 1, 0);
    ++bins[diff];
    ++out.dyads;
    if (diff == 0) ++out.zero_difference;
  }
  return out;
}

SplDifference spl_difference_distribution(const Graph& g, const DyadSplTable& approx) {
  std::vector<NodeId> nodes;
  for (const DyadSpl& r : approx.records) {
    nodes.push_back(r.i);
    nodes.push_back(r.j);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return spl_difference_distribution(approx, exact_spls(g, nodes));
}

}  // namespace spld
