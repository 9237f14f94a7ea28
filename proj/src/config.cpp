#include "spld/config.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "spld/error.hpp"
#include "spld/evaluation.hpp"
#include "spld/generators.hpp"
#include "spld/io.hpp"

namespace spld {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T out{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("bad value for " + std::string(key) + ": '" + std::string(text) + "'");
  }
  return out;
}

template <typename T>
std::string format_value(T v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<EstimatorKind> parse_estimator_list(std::string_view text) {
  std::vector<EstimatorKind> kinds;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) {
      auto kind = parse_estimator(item);
      if (!kind) throw ArgumentError("unknown estimator '" + std::string(item) + "'");
      kinds.push_back(*kind);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return kinds;
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "name") cfg.name = value;
  else if (key == "generator") cfg.generator = value;
  else if (key == "n") cfg.n = parse_value<std::size_t>(key, value);
  else if (key == "p") cfg.p = parse_value<double>(key, value);
  else if (key == "m") cfg.m = parse_value<std::size_t>(key, value);
  else if (key == "m0") cfg.m0 = parse_value<std::size_t>(key, value);
  else if (key == "shape") cfg.shape = parse_value<double>(key, value);
  else if (key == "scale") cfg.scale = parse_value<double>(key, value);
  else if (key == "graph_seed") cfg.graph_seed = parse_value<std::uint64_t>(key, value);
  else if (key == "edge_list") cfg.edge_list = std::string(value);
  else if (key == "beta") cfg.design.beta = parse_value<double>(key, value);
  else if (key == "gamma") cfg.design.gamma = parse_value<double>(key, value);
  else if (key == "walkers") cfg.design.walkers = parse_value<std::size_t>(key, value);
  else if (key == "burn_in") cfg.design.burn_in = parse_value<std::size_t>(key, value);
  else if (key == "estimators") cfg.design.kinds = parse_estimator_list(value);
  else if (key == "spl_method") {
    auto m = parse_spl_method(value);
    if (!m) throw ArgumentError("unknown spl_method '" + std::string(value) + "'");
    cfg.design.spl_method = *m;
  } else if (key == "cv_threshold") cfg.design.cv_threshold = parse_value<double>(key, value);
  else if (key == "tau_method") {
    auto t = parse_tau_method(value);
    if (!t) throw ArgumentError("unknown tau_method '" + std::string(value) + "'");
    cfg.design.tau = *t;
  } else if (key == "replicates") cfg.replicates = parse_value<std::size_t>(key, value);
  else if (key == "seed") cfg.seed = parse_value<std::uint64_t>(key, value);
  else if (key == "output_dir") cfg.output_dir = std::string(value);
  else if (key == "threads") cfg.threads = parse_value<std::size_t>(key, value);
  else throw ArgumentError("unknown config key '" + std::string(key) + "'");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", lineno);
    try {
      apply_setting(cfg, body.substr(0, eq), body.substr(eq + 1));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config " + path.string());
  return parse_config(in);
}

void apply_overrides(ExperimentConfig& cfg, std::span<const std::string> overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ArgumentError("override must be key=value, got '" + o + "'");
    apply_setting(cfg, std::string_view(o).substr(0, eq), std::string_view(o).substr(eq + 1));
  }
}

void validate(const ExperimentConfig& cfg) {
  const bool gen = !cfg.generator.empty();
  const bool file = !cfg.edge_list.empty();
  if (gen == file) throw ArgumentError("set exactly one of generator or edge_list");
  if (gen) {
    if (cfg.n < 2) throw ArgumentError("generator needs n >= 2");
    if (cfg.generator == "erdos_renyi") {
      if (!(cfg.p > 0.0 && cfg.p < 1.0)) throw ArgumentError("erdos_renyi needs p in (0, 1)");
    } else if (cfg.generator == "preferential_attachment") {
      if (cfg.m < 1) throw ArgumentError("preferential_attachment needs m >= 1");
    } else if (cfg.generator == "configuration_gamma") {
      if (!(cfg.shape > 0.0 && cfg.scale > 0.0)) {
        throw ArgumentError("configuration_gamma needs shape > 0 and scale > 0");
      }
    } else {
      throw ArgumentError("unknown generator '" + cfg.generator + "'");
    }
  }
  const Design& d = cfg.design;
  if (!(d.beta > 0.0 && d.beta < 1.0)) throw ArgumentError("beta must lie in (0, 1)");
  if (!(d.gamma > 0.0 && d.gamma <= 1.0)) throw ArgumentError("gamma must lie in (0, 1]");
  if (d.walkers < 1) throw ArgumentError("walkers must be >= 1");
  if (d.kinds.empty()) throw ArgumentError("estimators list is empty");
  if (!(d.cv_threshold > 0.0)) throw ArgumentError("cv_threshold must be positive");
  if (cfg.replicates < 1) throw ArgumentError("replicates must be >= 1");
  if (cfg.threads < 1) throw ArgumentError("threads must be >= 1");
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!cfg.name.empty()) out.emplace_back("name", cfg.name);
  if (!cfg.generator.empty()) {
    out.emplace_back("generator", cfg.generator);
    out.emplace_back("n", format_value(cfg.n));
    if (cfg.generator == "erdos_renyi") out.emplace_back("p", format_value(cfg.p));
    if (cfg.generator == "preferential_attachment") {
      out.emplace_back("m", format_value(cfg.m));
      out.emplace_back("m0", format_value(cfg.m0));
    }
    if (cfg.generator == "configuration_gamma") {
      out.emplace_back("shape", format_value(cfg.shape));
      out.emplace_back("scale", format_value(cfg.scale));
    }
    out.emplace_back("graph_seed", format_value(cfg.graph_seed));
  }
  if (!cfg.edge_list.empty()) out.emplace_back("edge_list", cfg.edge_list.string());
  const Design& d = cfg.design;
  out.emplace_back("beta", format_value(d.beta));
  out.emplace_back("gamma", format_value(d.gamma));
  out.emplace_back("walkers", format_value(d.walkers));
  out.emplace_back("burn_in", format_value(d.burn_in));
  std::string kinds;
  for (auto k : d.kinds) {
    if (!kinds.empty()) kinds += ',';
    kinds += to_string(k);
  }
  out.emplace_back("estimators", kinds);
  out.emplace_back("spl_method", std::string(to_string(d.spl_method)));
  out.emplace_back("cv_threshold", format_value(d.cv_threshold));
  out.emplace_back("tau_method", std::string(to_string(d.tau)));
  out.emplace_back("replicates", format_value(cfg.replicates));
  out.emplace_back("seed", format_value(cfg.seed));
  out.emplace_back("output_dir", cfg.output_dir.string());
  out.emplace_back("threads", format_value(cfg.threads));
  return out;
}

void write_config(std::ostream& out, const ExperimentConfig& cfg) {
  for (const auto& [k, v] : config_entries(cfg)) out << k << " = " << v << '\n';
}

Graph build_network(const ExperimentConfig& cfg) {
  if (!cfg.edge_list.empty()) return ingest_edge_list(cfg.edge_list).graph;
  if (cfg.generator == "erdos_renyi") {
    return largest_connected_component(gen_erdos_renyi(cfg.n, cfg.p, cfg.graph_seed)).graph;
  }
  if (cfg.generator == "preferential_attachment") {
    return gen_preferential_attachment(cfg.n, cfg.m, cfg.m0 == 0 ? cfg.m : cfg.m0, cfg.graph_seed);
  }
  if (cfg.generator == "configuration_gamma") {
    return gen_configuration_gamma(cfg.n, cfg.shape, cfg.scale, cfg.graph_seed).graph;
  }
  throw ArgumentError("unknown generator '" + cfg.generator + "'");
}

int run_experiment(const ExperimentConfig& cfg, std::ostream& log) {
  nlohmann::json config_json = nlohmann::json::object();
  for (const auto& [k, v] : config_entries(cfg)) config_json[k] = v;

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) {
    log << "error: cannot create " << cfg.output_dir << ": " << ec.message() << '\n';
    return 2;
  }
  const auto result_path = cfg.output_dir / "result.json";
  try {
    validate(cfg);
    const Graph g = build_network(cfg);
    const DegreeStats ds = degree_moments(g);
    log << "network: n=" << g.node_count() << " m=" << g.edge_count() << " cv=" << ds.cv << '\n';
    EvalReport report = replicate(g, cfg.design, cfg.replicates, cfg.seed, cfg.threads);
    report.network = cfg.name;

    for (const auto& est : report.estimators) {
      std::ofstream csv(cfg.output_dir / ("per_l_" + std::string(to_string(est.kind)) + ".csv"));
      write_per_l_csv(csv, report, est);
    }
    nlohmann::json j = to_json(report);
    j["status"] = "complete";
    j["config"] = config_json;
    j["network"]["mean_degree"] = ds.mean;
    j["network"]["cv"] = ds.cv;
    std::ofstream(result_path) << j.dump(2) << '\n';
    for (const auto& est : report.estimators) {
      log << to_string(est.kind) << ": MAD=" << est.mad.aggregate << " RMSE=" << est.rmse.aggregate;
      if (est.kl) log << " KL=" << est.kl->mean;
      log << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    nlohmann::json j{{"status", "failed"}, {"error", e.what()}, {"config", config_json}};
    std::ofstream(result_path) << j.dump(2) << '\n';
    log << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace spld
