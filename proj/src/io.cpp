#include "spld/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>

#include "spld/error.hpp"

namespace spld {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path.string());
  return in;
}

}  // namespace

IngestResult ingest_edge_list(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  IngestReport report;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() < 2) throw ParseError("expected two node ids, got '" + line + "'", lineno);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!parse_number(toks[0], a) || !parse_number(toks[1], b)) {
      throw ParseError("node ids must be integers, got '" + line + "'", lineno);
    }
    ++report.data_lines;
    raw.emplace_back(a, b);
  }
  if (raw.empty()) throw ArgumentError("edge list contains no edges");

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [a, b] : raw) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  report.raw_nodes = ids.size();

  auto compact = [&ids](std::int64_t x) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.push_back({compact(a), compact(b)});

  BuildReport build;
  Graph full = Graph::from_edges(ids.size(), edges, &build);
  report.self_loops_dropped = build.self_loops_dropped;
  report.duplicates_dropped = build.duplicates_dropped;
  if (full.edge_count() == 0) throw ArgumentError("edge list has no edges after dropping self-loops");

  auto lcc = largest_connected_component(full);
  IngestResult out;
  out.graph = std::move(lcc.graph);
  out.original_id.reserve(lcc.new_to_old.size());
  for (NodeId v : lcc.new_to_old) out.original_id.push_back(ids[v]);
  report.final_nodes = out.graph.node_count();
  report.final_edges = out.graph.edge_count();
  out.report = report;
  return out;
}

IngestResult ingest_edge_list(const std::filesystem::path& path) {
  auto in = open_in(path);
  return ingest_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "# nodes: " << g.node_count() << " edges: " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path.string());
  write_edge_list(out, g, comment);
}

nlohmann::json to_json(const IngestReport& r) {
  return {{"data_lines", r.data_lines},
          {"raw_nodes", r.raw_nodes},
          {"self_loops_dropped", r.self_loops_dropped},
          {"duplicates_dropped", r.duplicates_dropped},
          {"final_nodes", r.final_nodes},
          {"final_edges", r.final_edges}};
}

void write_dyad_csv(std::ostream& out, const DyadCsv& table) {
  for (const auto& [k, v] : table.meta) out << "# " << k << '=' << v << '\n';
  out << "i,j,spl,multiplicity,weight\n";
  out << std::setprecision(17);
  for (std::size_t r = 0; r < table.dyads.size(); ++r) {
    const DyadSpl& d = table.dyads[r];
    out << d.i << ',' << d.j << ',' << d.spl << ',' << table.multiplicity[r] << ','
        << table.weight[r] << '\n';
  }
}

DyadCsv read_dyad_csv(std::istream& in) {
  DyadCsv table;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos) table.meta[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    if (!header_seen) {
      if (line != "i,j,spl,multiplicity,weight") {
        throw ParseError("expected header i,j,spl,multiplicity,weight", lineno);
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    DyadSpl d{};
    double q = 0.0;
    double w = 0.0;
    if (cells.size() != 5 || !parse_number<NodeId>(cells[0], d.i) ||
        !parse_number<NodeId>(cells[1], d.j) || !parse_number<std::uint32_t>(cells[2], d.spl)) {
      throw ParseError("malformed dyad row '" + line + "'", lineno);
    }
    try {
      q = std::stod(cells[3]);
      w = std::stod(cells[4]);
    } catch (const std::exception&) {
      throw ParseError("malformed multiplicity or weight in '" + line + "'", lineno);
    }
    d.source = SplSource::observed;
    table.dyads.push_back(d);
    table.multiplicity.push_back(q);
    table.weight.push_back(w);
  }
  if (!header_seen) throw ParseError("missing CSV header", lineno);
  return table;
}

nlohmann::json to_json(const SpldHistogram& h) {
  nlohmann::json j;
  j["N"] = h.total;
  j["counts"] = nlohmann::json::array();
  for (std::uint32_t l = 1; l <= h.max_length(); ++l) {
    j["counts"].push_back({{"l", l}, {"N_l", h.count(l)}, {"f_l", h.fraction(l)}});
  }
  j["mean_distance"] = mean_length(h);
  j["diameter"] = h.max_length();
  return j;
}

nlohmann::json to_json(const EstimatorResult& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"fractions", r.fractions},
          {"total_estimate", r.total_estimate},
          {"sum", r.sum()}};
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json j;
  j["network"] = {{"name", report.network}, {"nodes", report.nodes}, {"edges", report.edges}};
  const Design& d = report.design;
  std::vector<std::string> kinds;
  for (auto k : d.kinds) kinds.emplace_back(to_string(k));
  j["design"] = {{"beta", d.beta},
                 {"gamma", d.gamma},
                 {"walkers", d.walkers},
                 {"burn_in", d.burn_in},
                 {"estimators", kinds},
                 {"spl_method", std::string(to_string(d.spl_method))},
                 {"cv_threshold", d.cv_threshold},
                 {"tau_method", std::string(to_string(d.tau))}};
  j["replicates"] = report.replicates;
  j["seed"] = report.seed;
  j["truth"] = report.truth;

  nlohmann::json ests = nlohmann::json::object();
  for (const auto& e : report.estimators) {
    nlohmann::json ej;
    ej["MAD"] = e.mad.aggregate;
    ej["MAD_se"] = optional_number(e.mad.standard_error);
    ej["RMSE"] = e.rmse.aggregate;
    ej["RMSE_se"] = optional_number(e.rmse.standard_error);
    if (e.kl) {
      ej["KL"] = e.kl->mean;
      ej["KL_se"] = optional_number(e.kl->standard_error);
      ej["KL_div10"] = e.kl->scaled();
    } else {
      ej["KL"] = nullptr;
    }
    nlohmann::json per_l = nlohmann::json::array();
    for (std::size_t l = 0; l < e.box.size(); ++l) {
      const BoxStats& b = e.box[l];
      per_l.push_back({{"l", l + 1},
                       {"truth", l < report.truth.size() ? report.truth[l] : 0.0},
                       {"MAD", e.mad.per_l[l]},
                       {"RMSE", e.rmse.per_l[l]},
                       {"min", b.min},
                       {"q1", b.q1},
                       {"median", b.median},
                       {"q3", b.q3},
                       {"max", b.max},
                       {"mean", b.mean}});
    }
    ej["per_l"] = std::move(per_l);
    ests[std::string(to_string(e.kind))] = std::move(ej);
  }
  j["estimators"] = std::move(ests);

  nlohmann::json diag = nlohmann::json::array();
  for (const auto& r : report.diagnostics) {
    diag.push_back({{"seed", r.seed},
                    {"spl_source", std::string(to_string(r.spl_source))},
                    {"cv_hat", r.cv_hat},
                    {"edge_fraction", r.edge_fraction},
                    {"distinct_nodes", r.distinct_nodes},
                    {"landmarks", r.landmarks},
                    {"omitted_dyads", r.omitted_dyads},
                    {"warnings", r.warnings}});
  }
  j["samples"] = std::move(diag);
  return j;
}

void write_per_l_csv(std::ostream& out, const EvalReport& report, const EstimatorReport& est) {
  out << "l,truth,MAD_l,RMSE_l,min,q1,median,q3,max,mean\n";
  out << std::setprecision(10);
  for (std::size_t l = 0; l < est.box.size(); ++l) {
    const BoxStats& b = est.box[l];
    out << (l + 1) << ',' << (l < report.truth.size() ? report.truth[l] : 0.0) << ','
        << est.mad.per_l[l] << ',' << est.rmse.per_l[l] << ',' << b.min << ',' << b.q1 << ','
        << b.median << ',' << b.q3 << ',' << b.max << ',' << b.mean << '\n';
  }
}

}  // namespace spld
