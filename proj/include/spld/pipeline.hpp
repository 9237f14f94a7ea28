#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "spld/estimators.hpp"
#include "spld/graph.hpp"
#include "spld/sampler.hpp"
#include "spld/spl_approx.hpp"

namespace spld {

// How dyad SPLs between sampled nodes are approximated. `automatic` picks
// observed vs landmark per sample from the estimated c.v.; `exact` uses true
// population distances (for reference runs).
enum class SplMethod { automatic, observed, landmark, exact };

std::string_view to_string(SplMethod m);
std::optional<SplMethod> parse_spl_method(std::string_view name);

struct Design {
  double beta = 0.2;
  double gamma = 0.3;
  std::size_t walkers = 1;
  std::size_t burn_in = 0;
  std::vector<EstimatorKind> kinds{std::begin(kAllEstimators), std::end(kAllEstimators)};
  SplMethod spl_method = SplMethod::automatic;
  double cv_threshold = kDefaultCvThreshold;
  TauMethod tau = TauMethod::approach1;
};

struct SplApproximation {
  DyadSplTable table;
  SplSource source = SplSource::observed;
  std::size_t landmarks = 0;
  double edge_fraction = 0.0;  // E.f of the induced subgraph
};

// Resolves `automatic` against `cv_hat` and builds the dyad SPL table.
SplApproximation approximate_spls(const Graph& g, const WalkSample& ws, SplMethod method,
                                  double gamma, double cv_hat,
                                  double cv_threshold = kDefaultCvThreshold);

struct PipelineOutcome {
  SampleEstimate estimate;
  SplSource spl_source = SplSource::observed;
  std::size_t distinct_nodes = 0;
  std::size_t landmarks = 0;
  double edge_fraction = 0.0;
};

// One sample: walks, SPL approximation, and every estimator in the design.
PipelineOutcome run_pipeline(const Graph& g, const Design& design, std::uint64_t seed);

}  // namespace spld
