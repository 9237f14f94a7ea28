#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "spld/evaluation.hpp"
#include "spld/graph.hpp"
#include "spld/spl_approx.hpp"

namespace spld {

struct IngestReport {
  std::size_t data_lines = 0;
  std::size_t raw_nodes = 0;  // distinct ids seen
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;  // includes reversed copies of directed edges
  std::size_t final_nodes = 0;
  std::size_t final_edges = 0;
};

struct IngestResult {
  Graph graph;                           // largest connected component
  std::vector<std::int64_t> original_id;  // per final node
  IngestReport report;
};

// SNAP-style edge list: '#' comment lines, two or more whitespace-separated
// integer tokens per data line (extra columns ignored). Ids are compacted in
// ascending order of their original value, so a file already labelled
// 0..n-1 keeps its labels.
IngestResult ingest_edge_list(std::istream& in);
IngestResult ingest_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment = {});
void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const std::string& comment = {});

nlohmann::json to_json(const IngestReport& r);

/// Dyad-SPL table on disk: `# key=value` metadata lines, then a CSV with
/// columns i,j,spl,multiplicity,weight.
struct DyadCsv {
  std::map<std::string, std::string> meta;
  std::vector<DyadSpl> dyads;
  std::vector<double> multiplicity;
  std::vector<double> weight;
};

void write_dyad_csv(std::ostream& out, const DyadCsv& table);
DyadCsv read_dyad_csv(std::istream& in);

nlohmann::json to_json(const SpldHistogram& h);
nlohmann::json to_json(const EstimatorResult& r);
nlohmann::json to_json(const EvalReport& report);

// Per-l table for one estimator: l,truth,MAD_l,RMSE_l,min,q1,median,q3,max,mean
void write_per_l_csv(std::ostream& out, const EvalReport& report, const EstimatorReport& est);

}  // namespace spld
