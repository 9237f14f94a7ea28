#include "spld/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spld/error.hpp"
#include "spld/kernels.hpp"

namespace spld {

std::string_view to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::uw: return "UW";
    case EstimatorKind::ghh: return "GHH";
    case EstimatorKind::ghh_ratio: return "GHH_ratio";
    case EstimatorKind::ht: return "HT";
    case EstimatorKind::ht_ratio: return "HT_ratio";
  }
  return "?";
}

std::optional<EstimatorKind> parse_estimator(std::string_view name) {
  for (EstimatorKind k : kAllEstimators) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool is_normalised(EstimatorKind kind) {
  return kind == EstimatorKind::uw || kind == EstimatorKind::ghh_ratio ||
         kind == EstimatorKind::ht_ratio;
}

std::string_view to_string(TauMethod m) {
  return m == TauMethod::approach1 ? "approach1" : "approach2";
}

std::optional<TauMethod> parse_tau_method(std::string_view name) {
  if (name == "approach1" || name == "1") return TauMethod::approach1;
  if (name == "approach2" || name == "2") return TauMethod::approach2;
  return std::nullopt;
}

MomentEstimates estimate_moments(std::span<const std::uint32_t> degrees,
                                 std::span<const std::uint64_t> multiplicity, std::size_t n) {
  if (degrees.empty() || degrees.size() != multiplicity.size()) {
    throw ArgumentError("estimate_moments: need one multiplicity per sampled degree");
  }
  std::vector<double> q(degrees.size());
  std::vector<double> k(degrees.size());
  double s = 0.0;
  double k_sum = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == 0) throw ArgumentError("estimate_moments: sampled node with degree 0");
    q[i] = static_cast<double>(multiplicity[i]);
    k[i] = static_cast<double>(degrees[i]);
    s += q[i];
    k_sum += q[i] * k[i];
  }
  if (!(s > 0.0)) throw ArgumentError("estimate_moments: empty sample");
  const double inv_sum = kernels::ratio_sum(q, k);

  MomentEstimates m;
  m.n = n;
  m.k1_hat = s / inv_sum;
  m.k2_hat = k_sum / inv_sum;
  const double var = m.k2_hat - m.k1_hat * m.k1_hat;
  if (var < 0.0) {
    m.cv_hat = 0.0;
    m.cv_clamped = true;
  } else {
    m.cv_hat = std::sqrt(var) / m.k1_hat;
  }
  const double nd = static_cast<double>(n);
  m.alpha_hat = 2.0 / ((nd * m.k1_hat) * (nd * m.k1_hat) - nd * m.k2_hat);
  return m;
}

MomentEstimates estimate_moments(const Graph& g, const WalkSample& ws) {
  std::vector<std::uint32_t> k;
  std::vector<std::uint64_t> q;
  k.reserve(ws.distinct_nodes.size());
  q.reserve(ws.distinct_nodes.size());
  for (NodeId v : ws.distinct_nodes) {
    k.push_back(static_cast<std::uint32_t>(g.degree(v)));
    q.push_back(ws.visit_counts[v]);
  }
  return estimate_moments(k, q, g.node_count());
}

double psi_hat(double k_i, double k_j, const MomentEstimates& m) {
  if (!(m.alpha_hat > 0.0) || !std::isfinite(m.alpha_hat)) {
    throw NumericError("psi_hat: (n k1)^2 - n k2 is not positive; graph too small for weights");
  }
  return m.alpha_hat * k_i * k_j;
}

double exact_alpha(std::span<const std::uint32_t> degrees) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (auto k : degrees) {
    sum += k;
    sum_sq += static_cast<double>(k) * k;
  }
  const double denom = sum * sum - sum_sq;
  if (!(denom > 0.0)) throw NumericError("exact_alpha: degenerate degree sequence");
  return 2.0 / denom;
}

namespace {

// 1 - (1 - p)^t, accurate for small p.
double inclusion(double p, double t) {
  if (p >= 1.0) return 1.0;
  return -std::expm1(t * std::log1p(-p));
}

}  // namespace

double theta_hat(double k_i, double k1_hat, std::size_t n, double t) {
  return inclusion(k_i / (static_cast<double>(n) * k1_hat), t);
}

double theta_pair_exact(double p_i, double p_j, double t) {
  return 1.0 - std::pow(1.0 - p_i, t) - std::pow(1.0 - p_j, t) + std::pow(1.0 - p_i - p_j, t);
}

std::vector<double> tau_approach1(std::span<const double> theta,
                                  std::span<const std::uint32_t> degrees,
                                  std::span<const std::uint64_t> multiplicity,
                                  std::size_t distinct_nodes, std::size_t n) {
  if (theta.size() != degrees.size() || theta.size() != multiplicity.size()) {
    throw ArgumentError("tau_approach1: per-node inputs differ in length");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double w = static_cast<double>(multiplicity[i]) / degrees[i];
    num += w * theta[i];
    den += w;
  }
  const double theta_bar = num / den;
  const double scale = static_cast<double>(distinct_nodes) / (static_cast<double>(n) * theta_bar);
  std::vector<double> tau(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    tau[i] = std::min(1.0, scale * theta[i]);
    if (!(tau[i] > 0.0)) throw NumericError("tau_approach1: zero inclusion probability");
  }
  return tau;
}

TauSearch tau_approach2(std::span<const double> phi, double t, std::size_t n) {
  for (double p : phi) {
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("tau_approach2: phi must lie in (0, 1)");
  }
  if (!(t >= 1.0)) throw ArgumentError("tau_approach2: need t >= 1");
  const double nd = static_cast<double>(n);
  auto h = [&](double ts) {
    double s = 0.0;
    for (double p : phi) s += 1.0 / inclusion(p, ts);
    return s - nd;
  };

  TauSearch out;
  const double h_at_t = h(t);
  double root;
  if (h_at_t > 0.0) {
    // No sign change on (0, t]; the boundary minimises h^2.
    if (h_at_t > 1e-6) return out;
    root = t;
  } else {
    double lo = t / 2.0;
    while (h(lo) <= 0.0) lo /= 2.0;
    double hi = t;
    while (hi - lo > 1e-9 * hi) {
      const double mid = 0.5 * (lo + hi);
      (h(mid) > 0.0 ? lo : hi) = mid;
    }
    root = hi;
  }
  out.found = true;
  out.t_star = root;
  out.tau.resize(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out.tau[i] = std::min(1.0, inclusion(phi[i], root));
  return out;
}

double EstimatorResult::sum() const noexcept {
  return std::accumulate(fractions.begin(), fractions.end(), 0.0);
}

double EstimatorResult::mean_length() const noexcept {
  double m = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    m += static_cast<double>(i + 1) * fractions[i];
    total += fractions[i];
  }
  return total > 0.0 ? m / total : 0.0;
}

namespace {

std::string dyad_name(const DyadSpl& d) {
  return "(" + std::to_string(d.i) + ", " + std::to_string(d.j) + ")";
}

// Per-class totals of `values` keyed by SPL, plus their grand total.
std::vector<double> class_totals(std::span<const DyadSpl> dyads, std::span<const double> values) {
  std::uint32_t max_l = 0;
  std::vector<std::int32_t> cls(dyads.size());
  for (std::size_t r = 0; r < dyads.size(); ++r) {
    if (dyads[r].spl < 1) throw ArgumentError("dyad " + dyad_name(dyads[r]) + " has SPL 0");
    max_l = std::max(max_l, dyads[r].spl);
    cls[r] = static_cast<std::int32_t>(dyads[r].spl - 1);
  }
  std::vector<double> acc(max_l, 0.0);
  kernels::class_sums(cls, values, acc);
  return acc;
}

std::vector<double> weighted_values(std::span<const DyadSpl> dyads,
                                    std::span<const double> multiplicity,
                                    std::span<const double> weight) {
  if (dyads.empty()) throw EstimationError("no dyads with an approximated SPL");
  if (weight.size() != dyads.size() ||
      (!multiplicity.empty() && multiplicity.size() != dyads.size())) {
    throw ArgumentError("dyad weights are not aligned with the dyad table");
  }
  std::vector<double> v(dyads.size());
  for (std::size_t r = 0; r < dyads.size(); ++r) {
    if (!(weight[r] > 0.0) || !std::isfinite(weight[r])) {
      throw NumericError("dyad " + dyad_name(dyads[r]) + " has nonpositive weight");
    }
    v[r] = (multiplicity.empty() ? 1.0 : multiplicity[r]) / weight[r];
  }
  return v;
}

EstimatorResult normalised(EstimatorKind kind, std::vector<double> totals) {
  EstimatorResult res;
  res.kind = kind;
  // Summing the class totals keeps the fractions summing to one.
  res.total_estimate = std::accumulate(totals.begin(), totals.end(), 0.0);
  res.fractions = std::move(totals);
  for (double& f : res.fractions) f /= res.total_estimate;
  return res;
}

}  // namespace

EstimatorResult estimate_uw(const DyadSplTable& table) {
  if (table.records.empty()) throw EstimationError("estimate_uw: empty dyad table");
  std::vector<double> ones(table.records.size(), 1.0);
  return normalised(EstimatorKind::uw, class_totals(table.records, ones));
}

EstimatorResult estimate_ghh(std::span<const DyadSpl> dyads, std::span<const double> multiplicity,
                             std::span<const double> psi, double sample_dyads,
                             double population_dyads) {
  if (!(sample_dyads > 0.0) || !(population_dyads > 0.0)) {
    throw ArgumentError("estimate_ghh: |S| and N must be positive");
  }
  if (multiplicity.size() != dyads.size()) throw ArgumentError("estimate_ghh: one Q_r per dyad required");
  auto v = weighted_values(dyads, multiplicity, psi);
  auto totals = class_totals(dyads, v);
  EstimatorResult res;
  res.kind = EstimatorKind::ghh;
  res.total_estimate = kernels::ratio_sum(multiplicity, psi) / sample_dyads;
  res.fractions = std::move(totals);
  for (double& f : res.fractions) f = f / sample_dyads / population_dyads;
  return res;
}

EstimatorResult estimate_ghh_ratio(std::span<const DyadSpl> dyads,
                                   std::span<const double> multiplicity,
                                   std::span<const double> psi) {
  if (multiplicity.size() != dyads.size()) {
    throw ArgumentError("estimate_ghh_ratio: one Q_r per dyad required");
  }
  auto v = weighted_values(dyads, multiplicity, psi);
  return normalised(EstimatorKind::ghh_ratio, class_totals(dyads, v));
}

EstimatorResult estimate_ht(std::span<const DyadSpl> dyads, std::span<const double> pi,
                            double population_dyads) {
  if (!(population_dyads > 0.0)) throw ArgumentError("estimate_ht: N must be positive");
  auto v = weighted_values(dyads, {}, pi);
  auto totals = class_totals(dyads, v);
  EstimatorResult res;
  res.kind = EstimatorKind::ht;
  res.total_estimate = std::accumulate(totals.begin(), totals.end(), 0.0);
  res.fractions = std::move(totals);
  for (double& f : res.fractions) f /= population_dyads;
  return res;
}

EstimatorResult estimate_ht_ratio(std::span<const DyadSpl> dyads, std::span<const double> pi) {
  auto v = weighted_values(dyads, {}, pi);
  return normalised(EstimatorKind::ht_ratio, class_totals(dyads, v));
}

NodeWeights node_weights(const Graph& g, const WalkSample& ws, const MomentEstimates& m,
                         TauMethod method) {
  NodeWeights nw;
  const std::size_t count = ws.distinct_nodes.size();
  const std::size_t n = g.node_count();
  const double t = static_cast<double>(ws.sample_size());
  nw.degree.resize(count);
  nw.multiplicity.resize(count);
  nw.phi.resize(count);
  nw.theta.resize(count);
  for (std::size_t a = 0; a < count; ++a) {
    const NodeId v = ws.distinct_nodes[a];
    nw.degree[a] = static_cast<std::uint32_t>(g.degree(v));
    nw.multiplicity[a] = ws.visit_counts[v];
    nw.phi[a] = nw.degree[a] / (static_cast<double>(n) * m.k1_hat);
    nw.theta[a] = theta_hat(nw.degree[a], m.k1_hat, n, t);
  }
  if (method == TauMethod::approach2) {
    auto search = tau_approach2(nw.phi, t, n);
    if (search.found) {
      nw.tau = std::move(search.tau);
      nw.t_star = search.t_star;
      return nw;
    }
    nw.tau_fell_back = true;
  }
  nw.tau = tau_approach1(nw.theta, nw.degree, nw.multiplicity, count, n);
  return nw;
}

DyadWeights dyad_weights(const Graph& g, const WalkSample& ws, const DyadSplTable& table,
                         const MomentEstimates& m, const NodeWeights& nw) {
  std::vector<NodeId> pos(g.node_count(), kNoNode);
  for (std::size_t a = 0; a < ws.distinct_nodes.size(); ++a) {
    pos[ws.distinct_nodes[a]] = static_cast<NodeId>(a);
  }
  const bool psi_ok = m.alpha_hat > 0.0 && std::isfinite(m.alpha_hat);
  DyadWeights w;
  w.multiplicity.resize(table.records.size());
  w.psi.resize(table.records.size());
  w.pi.resize(table.records.size());
  for (std::size_t r = 0; r < table.records.size(); ++r) {
    const DyadSpl& d = table.records[r];
    const NodeId a = d.i < pos.size() ? pos[d.i] : kNoNode;
    const NodeId b = d.j < pos.size() ? pos[d.j] : kNoNode;
    if (a == kNoNode || b == kNoNode) {
      throw ConsistencyError("dyad " + dyad_name(d) + " has an endpoint outside the sample");
    }
    w.multiplicity[r] = static_cast<double>(nw.multiplicity[a]) * static_cast<double>(nw.multiplicity[b]);
    const double kk = static_cast<double>(nw.degree[a]) * nw.degree[b];
    // Without a usable alpha the weight stays proportional to k_i k_j, which is
    // all the ratio form needs.
    w.psi[r] = psi_ok ? m.alpha_hat * kk : kk;
    w.pi[r] = pi_hat(nw.tau[a], nw.tau[b]);
  }
  return w;
}

SampleEstimate estimate_all(const Graph& g, const WalkSample& ws, const DyadSplTable& table,
                            std::span<const EstimatorKind> kinds, TauMethod tau) {
  SampleEstimate out;
  out.moments = estimate_moments(g, ws);
  out.omitted_dyads = table.omitted_dyads;
  if (out.moments.cv_clamped) out.warnings.push_back("estimated <k^2> < <k>^2; c.v. set to 0");
  if (table.omitted_dyads > 0) {
    out.warnings.push_back(std::to_string(table.omitted_dyads) +
                           " dyads without an approximated SPL were dropped");
  }

  const bool need_tau = std::any_of(kinds.begin(), kinds.end(), [](EstimatorKind k) {
    return k == EstimatorKind::ht || k == EstimatorKind::ht_ratio;
  });
  NodeWeights nw;
  if (need_tau) {
    nw = node_weights(g, ws, out.moments, tau);
    out.t_star = nw.t_star;
    if (nw.tau_fell_back) {
      out.warnings.push_back("no exponent t* balances sum 1/tau = n; used approach 1");
    }
  } else {
    nw = node_weights(g, ws, out.moments, TauMethod::approach1);
  }
  const DyadWeights w = dyad_weights(g, ws, table, out.moments, nw);
  const double n = static_cast<double>(g.node_count());
  const double population_dyads = n * (n - 1.0) / 2.0;

  for (EstimatorKind k : kinds) {
    switch (k) {
      case EstimatorKind::uw:
        out.results.push_back(estimate_uw(table));
        break;
      case EstimatorKind::ghh:
        if (!(out.moments.alpha_hat > 0.0)) {
          throw NumericError("GHH: (n k1)^2 - n k2 is not positive");
        }
        out.results.push_back(estimate_ghh(table.records, w.multiplicity, w.psi,
                                           static_cast<double>(ws.dyad_sample_size()),
                                           population_dyads));
        break;
      case EstimatorKind::ghh_ratio:
        out.results.push_back(estimate_ghh_ratio(table.records, w.multiplicity, w.psi));
        break;
      case EstimatorKind::ht:
        out.results.push_back(estimate_ht(table.records, w.pi, population_dyads));
        break;
      case EstimatorKind::ht_ratio:
        out.results.push_back(estimate_ht_ratio(table.records, w.pi));
        break;
    }
  }
  return out;
}

}  // namespace spld
