#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "spld/graph.hpp"
#include "spld/sampler.hpp"

namespace spld {

enum class SplSource : std::uint8_t { observed, landmark, exact };

std::string_view to_string(SplSource s);

// One sampled dyad (parent-graph ids, i < j) with its approximated SPL.
struct DyadSpl {
  NodeId i;
  NodeId j;
  std::uint32_t spl;
  SplSource source;
};

struct DyadSplTable {
  std::vector<DyadSpl> records;    // lexicographic in (i, j)
  std::size_t omitted_dyads = 0;   // pairs with no finite approximation
};

// SPLs measured by BFS inside G* only. Pairs disconnected within G* are
// left out and counted in `omitted_dyads`.
DyadSplTable observed_spls(const InducedSubgraph& sub);

// True population SPLs between the given (sorted) nodes, one BFS per node.
DyadSplTable exact_spls(const Graph& g, std::span<const NodeId> nodes);

/// Landmark distance oracle: one population BFS row per landmark.
class LandmarkIndex {
 public:
  LandmarkIndex() = default;

  const std::vector<NodeId>& landmarks() const noexcept { return landmarks_; }
  std::size_t size() const noexcept { return landmarks_.size(); }
  std::size_t node_count() const noexcept { return n_; }

  // Distances from landmark number `k` to every population node.
  std::span<const std::int32_t> row(std::size_t k) const noexcept {
    return {rows_.data() + k * n_, n_};
  }

  friend LandmarkIndex build_landmark_index(const Graph& g, std::vector<NodeId> landmarks);

 private:
  std::vector<NodeId> landmarks_;
  std::vector<std::int32_t> rows_;  // landmark-major, size() * n_
  std::size_t n_ = 0;
};

// The max(1, round(gamma * |s*|)) visited nodes of highest population degree,
// ties to the smaller id; returned in that rank order.
std::vector<NodeId> select_landmarks(const WalkSample& ws, const Graph& g, double gamma);

LandmarkIndex build_landmark_index(const Graph& g, std::vector<NodeId> landmarks);

struct SplBounds {
  std::uint32_t upper;  // min over landmarks of l_sj + l_jt
  std::uint32_t lower;  // max over landmarks of |l_sj - l_jt|
};

SplBounds landmark_spl(NodeId s, NodeId t, const LandmarkIndex& idx);

// Upper-bound SPL estimate for every pair of `nodes` (sorted). Uses a
// node-major copy of the landmark rows so each pair is one contiguous
// min-plus scan.
DyadSplTable landmark_spls(const LandmarkIndex& idx, std::span<const NodeId> nodes);

// Distribution of (approx - true) grouped by true SPL.
struct SplDifference {
  // true SPL -> counts indexed by difference (0, 1, 2, ...)
  std::map<std::uint32_t, std::vector<std::uint64_t>> by_true_spl;
  std::uint64_t dyads = 0;
  std::uint64_t zero_difference = 0;

  double zero_fraction() const noexcept {
    return dyads == 0 ? 0.0 : static_cast<double>(zero_difference) / static_cast<double>(dyads);
  }
};

// `truth` must contain every dyad of `approx`; both lexicographically sorted.
SplDifference spl_difference_distribution(const DyadSplTable& approx, const DyadSplTable& truth);
SplDifference spl_difference_distribution(const Graph& g, const DyadSplTable& approx);

// Regime rule: estimated c.v. at or above the threshold uses observed SPLs.
inline constexpr double kDefaultCvThreshold = 2.0;
inline constexpr double kCvWarnLow = 1.5;
inline constexpr double kCvWarnHigh = 2.5;

inline bool prefers_observed_spls(double cv_hat, double threshold = kDefaultCvThreshold) {
  return cv_hat >= threshold;
}
inline bool in_cv_warning_band(double cv_hat) {
  return cv_hat >= kCvWarnLow && cv_hat <= kCvWarnHigh;
}

}  // namespace spld
