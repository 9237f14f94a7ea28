#include "spld/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "spld/error.hpp"
#include "spld/rng.hpp"

namespace spld {

namespace {

std::size_t union_length(std::span<const std::vector<double>> estimates,
                         std::span<const double> truth) {
  std::size_t len = truth.size();
  for (const auto& e : estimates) len = std::max(len, e.size());
  return len;
}

double at(std::span<const double> v, std::size_t i) { return i < v.size() ? v[i] : 0.0; }

void check_inputs(std::span<const std::vector<double>> estimates, std::span<const double> truth) {
  if (estimates.empty()) throw ArgumentError("need at least one replicate estimate");
  if (truth.empty()) throw ConsistencyError("truth distribution has empty support");
}

// Shared shape of MAD and RMSE: per-l statistic of |error| and the spread of
// |error| around it.
template <typename Stat>
ErrorSummary summarise(std::span<const std::vector<double>> estimates,
                       std::span<const double> truth, Stat stat) {
  check_inputs(estimates, truth);
  const std::size_t len = union_length(estimates, truth);
  const double k = static_cast<double>(estimates.size());
  ErrorSummary s;
  s.per_l.resize(len);
  s.per_l_variance.assign(len, 0.0);
  std::vector<double> abs_err(estimates.size());
  double var_sum = 0.0;
  for (std::size_t l = 0; l < len; ++l) {
    for (std::size_t r = 0; r < estimates.size(); ++r) {
      abs_err[r] = std::abs(at(estimates[r], l) - at(truth, l));
    }
    const double value = stat(abs_err);
    s.per_l[l] = value;
    if (estimates.size() >= 2) {
      double ss = 0.0;
      for (double e : abs_err) ss += (e - value) * (e - value);
      s.per_l_variance[l] = ss / (k - 1.0) / k;
      var_sum += s.per_l_variance[l];
    }
  }
  const double big_l = static_cast<double>(truth.size());
  s.aggregate = std::accumulate(s.per_l.begin(), s.per_l.end(), 0.0) / big_l;
  if (estimates.size() >= 2) s.standard_error = std::sqrt(var_sum) / big_l;
  return s;
}

}  // namespace

ErrorSummary mad(std::span<const std::vector<double>> estimates, std::span<const double> truth) {
  return summarise(estimates, truth, [](const std::vector<double>& e) {
    return std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
  });
}

ErrorSummary rmse(std::span<const std::vector<double>> estimates, std::span<const double> truth) {
  return summarise(estimates, truth, [](const std::vector<double>& e) {
    double ss = 0.0;
    for (double x : e) ss += x * x;
    return std::sqrt(ss / static_cast<double>(e.size()));
  });
}

KlSummary kl_sym(std::span<const std::vector<double>> estimates, std::span<const double> truth) {
  check_inputs(estimates, truth);
  for (std::size_t r = 0; r < estimates.size(); ++r) {
    const double total = std::accumulate(estimates[r].begin(), estimates[r].end(), 0.0);
    if (std::abs(total - 1.0) > 1e-6) {
      throw ArgumentError("kl_sym: replicate " + std::to_string(r) + " sums to " +
                          std::to_string(total) +
                          "; KL needs a distribution, use a ratio-form estimator");
    }
  }
  const std::size_t len = union_length(estimates, truth);
  auto floored = [len](std::span<const double> v) {
    std::vector<double> out(len);
    double total = 0.0;
    for (std::size_t l = 0; l < len; ++l) total += out[l] = std::max(at(v, l), kKlFloor);
    for (double& x : out) x /= total;
    return out;
  };
  const std::vector<double> p = floored(truth);
  KlSummary s;
  s.per_replicate.reserve(estimates.size());
  for (const auto& e : estimates) {
    const std::vector<double> q = floored(e);
    double kl = 0.0;
    for (std::size_t l = 0; l < len; ++l) kl += q[l] * std::log(q[l] / p[l]) + p[l] * std::log(p[l] / q[l]);
    s.per_replicate.push_back(kl);
  }
  const double k = static_cast<double>(estimates.size());
  s.mean = std::accumulate(s.per_replicate.begin(), s.per_replicate.end(), 0.0) / k;
  if (estimates.size() >= 2) {
    double ss = 0.0;
    for (double x : s.per_replicate) ss += (x - s.mean) * (x - s.mean);
    s.standard_error = std::sqrt(ss / (k - 1.0) / k);
  }
  return s;
}

std::vector<BoxStats> boxplot(std::span<const std::vector<double>> estimates,
                              std::span<const double> truth) {
  check_inputs(estimates, truth);
  const std::size_t len = union_length(estimates, truth);
  std::vector<BoxStats> out(len);
  std::vector<double> col(estimates.size());
  auto quantile = [&col](double p) {
    const double pos = p * static_cast<double>(col.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, col.size() - 1);
    return col[lo] + (pos - static_cast<double>(lo)) * (col[hi] - col[lo]);
  };
  for (std::size_t l = 0; l < len; ++l) {
    for (std::size_t r = 0; r < estimates.size(); ++r) col[r] = at(estimates[r], l);
    std::sort(col.begin(), col.end());
    out[l] = {col.front(), quantile(0.25), quantile(0.5), quantile(0.75), col.back(),
              std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size())};
  }
  return out;
}

const EstimatorReport& EvalReport::operator[](EstimatorKind kind) const {
  for (const auto& e : estimators) {
    if (e.kind == kind) return e;
  }
  throw ArgumentError("report has no estimator " + std::string(to_string(kind)));
}

EvalReport replicate(const Graph& g, const Design& design, std::size_t replicates,
                     std::uint64_t seed, std::size_t threads) {
  if (!is_connected(g)) throw PreconditionError("replicate: graph must be connected");
  return replicate(g, exact_spld(g), design, replicates, seed, threads);
}

EvalReport replicate(const Graph& g, const SpldHistogram& truth, const Design& design,
                     std::size_t replicates, std::uint64_t seed, std::size_t threads) {
  if (replicates < 1) throw ArgumentError("replicate: need K >= 1");
  if (design.kinds.empty()) throw ArgumentError("replicate: no estimators requested");

  std::vector<std::optional<PipelineOutcome>> outcomes(replicates);
  std::vector<std::exception_ptr> failures(replicates);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < replicates; k += stride) {
      try {
        outcomes[k] = run_pipeline(g, design, derive_seed(seed, k));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, replicates);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  for (std::size_t k = 0; k < replicates; ++k) {
    if (!failures[k]) continue;
    try {
      std::rethrow_exception(failures[k]);
    } catch (const std::exception& e) {
      throw EstimationError("replicate " + std::to_string(k) + " failed: " + e.what());
    }
  }

  EvalReport report;
  report.design = design;
  report.replicates = replicates;
  report.seed = seed;
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.truth = truth.fractions();
  for (std::size_t i = 0; i < design.kinds.size(); ++i) {
    EstimatorReport er;
    er.kind = design.kinds[i];
    for (const auto& o : outcomes) er.estimates.push_back(o->estimate.results[i].fractions);
    er.mad = mad(er.estimates, report.truth);
    er.rmse = rmse(er.estimates, report.truth);
    if (is_normalised(er.kind)) er.kl = kl_sym(er.estimates, report.truth);
    er.box = boxplot(er.estimates, report.truth);
    report.estimators.push_back(std::move(er));
  }
  for (std::size_t k = 0; k < replicates; ++k) {
    const auto& o = *outcomes[k];
    report.diagnostics.push_back({derive_seed(seed, k), o.spl_source, o.estimate.moments.cv_hat,
                                  o.edge_fraction, o.distinct_nodes, o.landmarks,
                                  o.estimate.omitted_dyads, o.estimate.warnings});
  }
  return report;
}

}  // namespace spld
