#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spld/config.hpp"
#include "spld/error.hpp"
#include "spld/estimators.hpp"
#include "spld/generators.hpp"
#include "spld/io.hpp"
#include "spld/kernels.hpp"
#include "spld/pipeline.hpp"
#include "spld/sampler.hpp"

namespace {

using spld::ArgumentError;

// Writes to the named file, or stdout for "-" / empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ArgumentError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

struct GenArgs {
  spld::ExperimentConfig cfg;
  std::string out;
};

struct SampleArgs {
  std::string graph;
  std::string out;
  spld::Design design;
  std::string spl_method = "auto";
  std::string weights = "hh";
  std::string tau = "approach1";
  std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& a) {
  spld::ExperimentConfig cfg = a.cfg;
  cfg.output_dir = ".";
  spld::validate(cfg);
  const spld::Graph g = spld::build_network(cfg);
  const auto ds = spld::degree_moments(g);
  std::ostringstream comment;
  comment << cfg.generator << " n=" << g.node_count() << " seed=" << cfg.graph_seed << " cv=" << ds.cv;
  Output out(a.out);
  spld::write_edge_list(out.stream(), g, comment.str());
  return 0;
}

int cmd_ingest(const std::string& in, const std::string& out, const std::string& report) {
  const auto result = spld::ingest_edge_list(std::filesystem::path(in));
  Output o(out);
  spld::write_edge_list(o.stream(), result.graph, "ingested from " + in);
  auto j = spld::to_json(result.report);
  if (!report.empty()) {
    Output r(report);
    r.stream() << j.dump(2) << '\n';
  } else {
    std::cerr << j.dump() << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& in, const std::string& out) {
  const auto result = spld::ingest_edge_list(std::filesystem::path(in));
  const auto h = spld::exact_spld(result.graph);
  auto j = spld::to_json(h);
  j["nodes"] = result.graph.node_count();
  j["edges"] = result.graph.edge_count();
  Output o(out);
  o.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_sample(const SampleArgs& a) {
  auto method = spld::parse_spl_method(a.spl_method);
  if (!method) throw ArgumentError("unknown spl method '" + a.spl_method + "'");
  auto tau = spld::parse_tau_method(a.tau);
  if (!tau) throw ArgumentError("unknown tau method '" + a.tau + "'");
  if (a.weights != "hh" && a.weights != "ht") throw ArgumentError("weights must be hh or ht");

  const spld::Graph g = spld::ingest_edge_list(std::filesystem::path(a.graph)).graph;
  const auto ws = spld::run_walks(g, a.design.walkers, a.design.beta, a.seed, a.design.burn_in);
  const auto moments = spld::estimate_moments(g, ws);
  const auto approx = spld::approximate_spls(g, ws, *method, a.design.gamma, moments.cv_hat,
                                             a.design.cv_threshold);
  const auto nw = spld::node_weights(g, ws, moments, *tau);
  const auto dw = spld::dyad_weights(g, ws, approx.table, moments, nw);

  spld::DyadCsv csv;
  const auto n = g.node_count();
  csv.meta["n"] = std::to_string(n);
  csv.meta["population_dyads"] = std::to_string(static_cast<std::uint64_t>(n) * (n - 1) / 2);
  csv.meta["sample_size"] = std::to_string(ws.sample_size());
  csv.meta["sample_dyads"] = std::to_string(ws.dyad_sample_size());
  csv.meta["distinct_nodes"] = std::to_string(ws.distinct_nodes.size());
  csv.meta["omitted_dyads"] = std::to_string(approx.table.omitted_dyads);
  csv.meta["spl_source"] = std::string(spld::to_string(approx.source));
  csv.meta["weight"] = a.weights == "hh" ? "psi" : "pi";
  csv.meta["seed"] = std::to_string(a.seed);
  csv.dyads = approx.table.records;
  csv.multiplicity = dw.multiplicity;
  csv.weight = a.weights == "hh" ? dw.psi : dw.pi;
  Output o(a.out);
  spld::write_dyad_csv(o.stream(), csv);
  return 0;
}

double meta_number(const spld::DyadCsv& csv, const std::string& key) {
  auto it = csv.meta.find(key);
  if (it == csv.meta.end()) throw ArgumentError("dyad file lacks '# " + key + "=' metadata");
  return std::stod(it->second);
}

int cmd_estimate(const std::string& in, const std::string& out, const std::string& kinds_text) {
  std::ifstream f(in);
  if (!f) throw ArgumentError("cannot open " + in);
  const spld::DyadCsv csv = spld::read_dyad_csv(f);
  const auto weight_it = csv.meta.find("weight");
  const std::string weight = weight_it == csv.meta.end() ? "psi" : weight_it->second;

  std::vector<spld::EstimatorKind> kinds;
  if (kinds_text.empty()) {
    kinds.push_back(spld::EstimatorKind::uw);
    if (weight == "psi") {
      kinds.push_back(spld::EstimatorKind::ghh);
      kinds.push_back(spld::EstimatorKind::ghh_ratio);
    } else {
      kinds.push_back(spld::EstimatorKind::ht);
      kinds.push_back(spld::EstimatorKind::ht_ratio);
    }
  } else {
    spld::ExperimentConfig tmp;
    spld::apply_setting(tmp, "estimators", kinds_text);
    kinds = tmp.design.kinds;
  }

  nlohmann::json j;
  j["input"] = in;
  j["estimates"] = nlohmann::json::object();
  for (auto kind : kinds) {
    const bool needs_psi = kind == spld::EstimatorKind::ghh || kind == spld::EstimatorKind::ghh_ratio;
    const bool needs_pi = kind == spld::EstimatorKind::ht || kind == spld::EstimatorKind::ht_ratio;
    if ((needs_psi && weight != "psi") || (needs_pi && weight != "pi")) {
      throw ArgumentError(std::string(spld::to_string(kind)) + " needs weight column " +
                          (needs_psi ? "psi" : "pi") + ", file has " + weight);
    }
    spld::EstimatorResult r;
    switch (kind) {
      case spld::EstimatorKind::uw: {
        spld::DyadSplTable t;
        t.records = csv.dyads;
        r = spld::estimate_uw(t);
        break;
      }
      case spld::EstimatorKind::ghh:
        r = spld::estimate_ghh(csv.dyads, csv.multiplicity, csv.weight,
                               meta_number(csv, "sample_dyads"), meta_number(csv, "population_dyads"));
        break;
      case spld::EstimatorKind::ghh_ratio:
        r = spld::estimate_ghh_ratio(csv.dyads, csv.multiplicity, csv.weight);
        break;
      case spld::EstimatorKind::ht:
        r = spld::estimate_ht(csv.dyads, csv.weight, meta_number(csv, "population_dyads"));
        break;
      case spld::EstimatorKind::ht_ratio:
        r = spld::estimate_ht_ratio(csv.dyads, csv.weight);
        break;
    }
    j["estimates"][std::string(spld::to_string(kind))] = spld::to_json(r);
  }
  Output o(out);
  o.stream() << j.dump(2) << '\n';
  return 0;
}

int cmd_evaluate(const std::string& config, const std::vector<std::string>& overrides) {
  spld::ExperimentConfig cfg = config.empty() ? spld::ExperimentConfig{} : spld::load_config(config);
  spld::apply_overrides(cfg, overrides);
  return spld::run_experiment(cfg, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest-path-length distribution estimation from random-walk samples"};
  app.require_subcommand(1);

  GenArgs gen;
  gen.cfg.generator = "preferential_attachment";
  auto* g = app.add_subcommand("gen", "generate a synthetic network as an edge list");
  g->add_option("--model", gen.cfg.generator, "erdos_renyi | preferential_attachment | configuration_gamma")
      ->capture_default_str();
  g->add_option("-n,--nodes", gen.cfg.n, "node count")->required();
  g->add_option("-p,--prob", gen.cfg.p, "edge probability (erdos_renyi)");
  g->add_option("-m,--attach", gen.cfg.m, "edges per new node (preferential_attachment)");
  g->add_option("--m0", gen.cfg.m0, "seed ring size, default m");
  g->add_option("--shape", gen.cfg.shape, "gamma shape (configuration_gamma)");
  g->add_option("--scale", gen.cfg.scale, "gamma scale (configuration_gamma)");
  g->add_option("--seed", gen.cfg.graph_seed)->capture_default_str();
  g->add_option("-o,--output", gen.out, "edge list path, default stdout");

  std::string ingest_in;
  std::string ingest_out;
  std::string ingest_report;
  auto* ing = app.add_subcommand("ingest", "clean a SNAP edge list down to its largest component");
  ing->add_option("input", ingest_in)->required();
  ing->add_option("-o,--output", ingest_out, "cleaned edge list, default stdout");
  ing->add_option("--report", ingest_report, "ingestion report JSON, default stderr");

  std::string oracle_in;
  std::string oracle_out;
  auto* ora = app.add_subcommand("oracle", "exact SPLD of a network by all-sources BFS");
  ora->add_option("input", oracle_in)->required();
  ora->add_option("-o,--output", oracle_out);

  SampleArgs sample;
  auto* smp = app.add_subcommand("sample", "random-walk sample to a dyad SPL table");
  smp->add_option("input", sample.graph)->required();
  smp->add_option("-o,--output", sample.out);
  smp->add_option("--beta", sample.design.beta)->capture_default_str();
  smp->add_option("--walkers", sample.design.walkers)->capture_default_str();
  smp->add_option("--burn-in", sample.design.burn_in)->capture_default_str();
  smp->add_option("--gamma", sample.design.gamma, "landmark fraction")->capture_default_str();
  smp->add_option("--spl-method", sample.spl_method, "auto | observed | landmark | exact")
      ->capture_default_str();
  smp->add_option("--cv-threshold", sample.design.cv_threshold)->capture_default_str();
  smp->add_option("--weights", sample.weights, "hh (psi) | ht (pi)")->capture_default_str();
  smp->add_option("--tau-method", sample.tau, "approach1 | approach2")->capture_default_str();
  smp->add_option("--seed", sample.seed)->capture_default_str();

  std::string est_in;
  std::string est_out;
  std::string est_kinds;
  auto* est = app.add_subcommand("estimate", "SPLD estimates from a dyad SPL table");
  est->add_option("input", est_in)->required();
  est->add_option("-o,--output", est_out);
  est->add_option("--estimators", est_kinds, "comma list, default all that the weight column allows");

  std::string eval_config;
  std::vector<std::string> eval_set;
  auto* ev = app.add_subcommand("evaluate", "replicated experiment from a config file");
  ev->add_option("config", eval_config);
  ev->add_option("--set", eval_set, "key=value override (repeatable)");

  auto* info = app.add_subcommand("info", "print the active kernel variant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return cmd_gen(gen);
    if (*ing) return cmd_ingest(ingest_in, ingest_out, ingest_report);
    if (*ora) return cmd_oracle(oracle_in, oracle_out);
    if (*smp) return cmd_sample(sample);
    if (*est) return cmd_estimate(est_in, est_out, est_kinds);
    if (*ev) return cmd_evaluate(eval_config, eval_set);
    if (*info) {
      std::cout << "kernels: " << spld::kernels::active_kernels().name << '\n';
      return 0;
    }
  } catch (const spld::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
