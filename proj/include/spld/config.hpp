#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spld/graph.hpp"
#include "spld/pipeline.hpp"

namespace spld {

// Exactly one of `generator` or `edge_list` names the network.
//
// generator = erdos_renyi            (n, p)
//           | preferential_attachment (n, m, m0; m0 = 0 means m0 = m)
//           | configuration_gamma     (n, shape, scale)
struct ExperimentConfig {
  std::string name;
  std::string generator;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t m = 0;
  std::size_t m0 = 0;
  double shape = 0.0;
  double scale = 0.0;
  std::uint64_t graph_seed = 1;
  std::filesystem::path edge_list;

  Design design;
  std::size_t replicates = 100;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
  std::size_t threads = 1;
};

// Overwrites one field from its textual form. Unknown keys and malformed
// values raise ArgumentError.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

// `key = value` lines; '#' starts a comment. Errors carry the line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

// `key=value` strings applied in order after the file.
void apply_overrides(ExperimentConfig& cfg, std::span<const std::string> overrides);

void validate(const ExperimentConfig& cfg);

// Canonical key/value echo; parse_config of its text reproduces the config.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& cfg);
void write_config(std::ostream& out, const ExperimentConfig& cfg);

Graph build_network(const ExperimentConfig& cfg);

// Builds the network, replicates the design and writes result.json plus one
// per-l CSV per estimator into output_dir. On failure result.json records
// status "failed" with the error and the return value is nonzero.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace spld
