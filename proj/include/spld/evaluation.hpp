#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spld/graph.hpp"
#include "spld/pipeline.hpp"

namespace spld {

// Replicate estimates and the truth are compared on the union of their
// supports, l = 1..max length, missing bins counting as 0. Aggregates average
// over the truth's L bins.
struct ErrorSummary {
  std::vector<double> per_l;           // index l - 1, union support
  std::vector<double> per_l_variance;  // estimated Var of each per-l value (0 when K < 2)
  double aggregate = 0.0;
  std::optional<double> standard_error;  // absent when K < 2
};

ErrorSummary mad(std::span<const std::vector<double>> estimates, std::span<const double> truth);
ErrorSummary rmse(std::span<const std::vector<double>> estimates, std::span<const double> truth);

struct KlSummary {
  std::vector<double> per_replicate;
  double mean = 0.0;
  std::optional<double> standard_error;

  double scaled() const noexcept { return mean / 10.0; }
};

inline constexpr double kKlFloor = 1e-12;

// Symmetrised KL (natural log) after flooring both distributions at kKlFloor
// and renormalising over the union support. Every estimate must sum to 1;
// original-form GHH/HT output is rejected.
KlSummary kl_sym(std::span<const std::vector<double>> estimates, std::span<const double> truth);

struct BoxStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

// Five-number summary plus mean of the K estimates at each l of the union
// support (linear-interpolated quartiles).
std::vector<BoxStats> boxplot(std::span<const std::vector<double>> estimates,
                              std::span<const double> truth);

struct EstimatorReport {
  EstimatorKind kind = EstimatorKind::uw;
  ErrorSummary mad;
  ErrorSummary rmse;
  std::optional<KlSummary> kl;  // normalised estimators only
  std::vector<BoxStats> box;
  std::vector<std::vector<double>> estimates;  // K replicate vectors
};

struct ReplicateDiagnostics {
  std::uint64_t seed = 0;
  SplSource spl_source = SplSource::observed;
  double cv_hat = 0.0;
  double edge_fraction = 0.0;
  std::size_t distinct_nodes = 0;
  std::size_t landmarks = 0;
  std::size_t omitted_dyads = 0;
  std::vector<std::string> warnings;
};

struct EvalReport {
  std::string network;
  Design design;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<double> truth;  // exact f_l, index l - 1
  std::vector<EstimatorReport> estimators;
  std::vector<ReplicateDiagnostics> diagnostics;

  const EstimatorReport& operator[](EstimatorKind kind) const;
};

// K independent pipelines with seeds derived from (seed, k). The truth is
// computed once with exact_spld unless supplied. Replicates may run on
// `threads` workers; the report is assembled in replicate order.
EvalReport replicate(const Graph& g, const Design& design, std::size_t replicates,
                     std::uint64_t seed, std::size_t threads = 1);
EvalReport replicate(const Graph& g, const SpldHistogram& truth, const Design& design,
                     std::size_t replicates, std::uint64_t seed, std::size_t threads = 1);

}  // namespace spld
