#include "spld/pipeline.hpp"

#include <sstream>

namespace spld {

std::string_view to_string(SplMethod m) {
  switch (m) {
    case SplMethod::automatic: return "auto";
    case SplMethod::observed: return "observed";
    case SplMethod::landmark: return "landmark";
    case SplMethod::exact: return "exact";
  }
  return "?";
}

std::optional<SplMethod> parse_spl_method(std::string_view name) {
  for (SplMethod m : {SplMethod::automatic, SplMethod::observed, SplMethod::landmark,
                      SplMethod::exact}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

SplApproximation approximate_spls(const Graph& g, const WalkSample& ws, SplMethod method,
                                  double gamma, double cv_hat, double cv_threshold) {
  if (method == SplMethod::automatic) {
    method = prefers_observed_spls(cv_hat, cv_threshold) ? SplMethod::observed : SplMethod::landmark;
  }
  SplApproximation out;
  const InducedSubgraph sub = induced_subgraph(g, ws);
  out.edge_fraction = sub.edge_fraction();
  switch (method) {
    case SplMethod::observed:
      out.source = SplSource::observed;
      out.table = observed_spls(sub);
      break;
    case SplMethod::landmark: {
      out.source = SplSource::landmark;
      auto idx = build_landmark_index(g, select_landmarks(ws, g, gamma));
      out.landmarks = idx.size();
      out.table = landmark_spls(idx, ws.distinct_nodes);
      break;
    }
    case SplMethod::exact:
    case SplMethod::automatic:
      out.source = SplSource::exact;
      out.table = exact_spls(g, ws.distinct_nodes);
      break;
  }
  return out;
}

PipelineOutcome run_pipeline(const Graph& g, const Design& design, std::uint64_t seed) {
  const WalkSample ws = run_walks(g, design.walkers, design.beta, seed, design.burn_in);
  const MomentEstimates moments = estimate_moments(g, ws);
  SplApproximation approx = approximate_spls(g, ws, design.spl_method, design.gamma,
                                             moments.cv_hat, design.cv_threshold);
  PipelineOutcome out;
  out.estimate = estimate_all(g, ws, approx.table, design.kinds, design.tau);
  out.spl_source = approx.source;
  out.distinct_nodes = ws.distinct_nodes.size();
  out.landmarks = approx.landmarks;
  out.edge_fraction = approx.edge_fraction;
  if (design.spl_method == SplMethod::automatic && in_cv_warning_band(moments.cv_hat)) {
    std::ostringstream msg;
    msg << "estimated c.v. " << moments.cv_hat
        << " is near the regime threshold; observed-SPL accuracy may vary";
    out.estimate.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace spld
