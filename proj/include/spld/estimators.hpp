#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spld/graph.hpp"
#include "spld/sampler.hpp"
#include "spld/spl_approx.hpp"

namespace spld {

enum class EstimatorKind { uw, ghh, ghh_ratio, ht, ht_ratio };

inline constexpr EstimatorKind kAllEstimators[] = {EstimatorKind::uw, EstimatorKind::ghh,
                                                    EstimatorKind::ghh_ratio, EstimatorKind::ht,
                                                    EstimatorKind::ht_ratio};

std::string_view to_string(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator(std::string_view name);
// Ratio forms and UW are normalised; original GHH/HT need not sum to one.
bool is_normalised(EstimatorKind kind);

/// Degree-moment estimates from a random-walk sample.
///
/// Nodes enter in proportion to degree, so each sampled degree is reweighted
/// by 1/k: k1 = |s| / sum 1/k, k2 = sum k / sum 1/k, both over the multiset s.
struct MomentEstimates {
  double k1_hat = 0.0;
  double k2_hat = 0.0;
  double cv_hat = 0.0;
  double alpha_hat = 0.0;   // 2 / ((n k1)^2 - n k2); not positive on degenerate inputs
  std::size_t n = 0;
  bool cv_clamped = false;  // k2 < k1^2 from a tiny sample, cv forced to 0
};

MomentEstimates estimate_moments(std::span<const std::uint32_t> degrees,
                                 std::span<const std::uint64_t> multiplicity, std::size_t n);
MomentEstimates estimate_moments(const Graph& g, const WalkSample& ws);

// Estimated long-run dyad selection probability alpha * k_i * k_j.
double psi_hat(double k_i, double k_j, const MomentEstimates& m);

// Exact alpha = 2 / ((sum k)^2 - sum k^2) for a known degree sequence.
double exact_alpha(std::span<const std::uint32_t> degrees);

// Probability node i is drawn at least once in t multinomial draws,
// with per-draw probability k_i / (n k1).
double theta_hat(double k_i, double k1_hat, std::size_t n, double t);

// Multinomial inclusion probability of both i and j; only used to check how
// far the product theta_i * theta_j drifts from it.
double theta_pair_exact(double p_i, double p_j, double t);

// Rescales theta so the implied expected distinct count matches |s*|:
// tau_i = |s*| / (n * theta_bar) * theta_i, theta_bar the 1/k-weighted mean of
// theta over the multiset s. Inputs are per distinct node; results lie in (0, 1].
std::vector<double> tau_approach1(std::span<const double> theta,
                                  std::span<const std::uint32_t> degrees,
                                  std::span<const std::uint64_t> multiplicity,
                                  std::size_t distinct_nodes, std::size_t n);

struct TauSearch {
  std::vector<double> tau;  // empty when no usable exponent exists
  double t_star = 0.0;
  bool found = false;
};

// Picks the exponent t* in (0, t] that drives
// h(t*) = sum_i 1 / (1 - (1 - phi_i)^t*) - n to zero (h is strictly
// decreasing) and sets tau_i = 1 - (1 - phi_i)^t*. When h(t) stays positive
// the minimiser of h^2 is t itself; that is accepted only if |h(t)| is within
// 1e-6, otherwise `found` is false and the caller should fall back.
TauSearch tau_approach2(std::span<const double> phi, double t, std::size_t n);

inline double pi_hat(double tau_i, double tau_j) { return tau_i * tau_j; }

/// Estimated SPLD. `fractions[l - 1]` estimates f_l.
struct EstimatorResult {
  EstimatorKind kind = EstimatorKind::uw;
  std::vector<double> fractions;
  double total_estimate = 0.0;  // N-hat (N* for UW)

  double fraction(std::uint32_t l) const noexcept {
    return (l >= 1 && l <= fractions.size()) ? fractions[l - 1] : 0.0;
  }
  double sum() const noexcept;
  double mean_length() const noexcept;
};

// N*_l / N* over the table's distinct dyads.
EstimatorResult estimate_uw(const DyadSplTable& table);

// N_l = (1/|S|) sum Q_r y_r^l / psi_r, divided by N.
EstimatorResult estimate_ghh(std::span<const DyadSpl> dyads, std::span<const double> multiplicity,
                             std::span<const double> psi, double sample_dyads,
                             double population_dyads);
// sum Q_r y_r^l / psi_r over sum Q_r / psi_r; any psi proportional to k_i k_j works.
EstimatorResult estimate_ghh_ratio(std::span<const DyadSpl> dyads,
                                   std::span<const double> multiplicity,
                                   std::span<const double> psi);
EstimatorResult estimate_ht(std::span<const DyadSpl> dyads, std::span<const double> pi,
                            double population_dyads);
EstimatorResult estimate_ht_ratio(std::span<const DyadSpl> dyads, std::span<const double> pi);

enum class TauMethod { approach1, approach2 };

std::string_view to_string(TauMethod m);
std::optional<TauMethod> parse_tau_method(std::string_view name);

// Per distinct sampled node (aligned with WalkSample::distinct_nodes).
struct NodeWeights {
  std::vector<std::uint32_t> degree;
  std::vector<std::uint64_t> multiplicity;  // q_i
  std::vector<double> phi;                  // k_i / (n k1_hat)
  std::vector<double> theta;
  std::vector<double> tau;
  double t_star = 0.0;                      // only set by approach 2
  bool tau_fell_back = false;
};

NodeWeights node_weights(const Graph& g, const WalkSample& ws, const MomentEstimates& m,
                         TauMethod method);

/// Weights attached to the approximated dyads of one sample: Q_r, psi_r, pi_r.
struct DyadWeights {
  std::vector<double> multiplicity;
  std::vector<double> psi;
  std::vector<double> pi;
};

DyadWeights dyad_weights(const Graph& g, const WalkSample& ws, const DyadSplTable& table,
                         const MomentEstimates& m, const NodeWeights& nw);

struct SampleEstimate {
  MomentEstimates moments;
  std::vector<EstimatorResult> results;  // same order as the requested kinds
  std::vector<std::string> warnings;
  std::size_t omitted_dyads = 0;
  double t_star = 0.0;
};

// All requested estimators on one sample. Degrees are looked up in `g`
// (crawled degrees of sampled nodes) and n = g.node_count().
SampleEstimate estimate_all(const Graph& g, const WalkSample& ws, const DyadSplTable& table,
                            std::span<const EstimatorKind> kinds,
                            TauMethod tau = TauMethod::approach1);

}  // namespace spld
