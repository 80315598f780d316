#pragma once

#include "dcomp/instances.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dcomp {

enum class Pipeline { Generate, Spanner, CompleteTree, AuditOnly, Dim, CertifyStar, CertifyLcp };

const char* to_string(Pipeline p);
Pipeline parse_pipeline(const std::string& name);

struct RunConfig {
  InstanceSpec instance;
  std::optional<std::string> input;  // metric or graph file replacing the generator
  /// Defaults to 1/4, or 2^-(p+1) for certify-lcp.
  std::optional<double> epsilon;
  Pipeline pipeline = Pipeline::Spanner;
  Index samples_per_edge = 2;
  Index exact_max_n = kDefaultExactMaxN;
  /// Dimension estimates are skipped on spaces with more points.
  Index max_dim_points = 256;
  std::optional<std::string> output;  // serialized artifact

  double effective_epsilon() const;
  /// Throws ConfigError.
  void validate() const;
};

struct RunReport {
  nlohmann::ordered_json body;  // reproducible from the config
  nlohmann::ordered_json timings;
  bool pass = false;

  /// FNV-1a of the serialized body, as 16 hex digits.
  std::string hash() const;
  /// `key = value` lines with nested keys joined by '.', arrays as `key:`
  /// followed by `  - item` lines; timings last.
  std::string to_text() const;
  /// {"report": body, "report_hash": ..., "timings": ...}
  nlohmann::ordered_json to_json() const;
  static RunReport from_json(const nlohmann::ordered_json& j);
};

/// Reads a metric or graph file, chosen by its header.
Instance read_instance_file(const std::string& path);

/// Runs the pipeline and writes the artifact when an output path is set.
/// Throws ConfigError for invalid configs; pipeline errors propagate.
RunReport run(const RunConfig& config);

/// Tab-separated rows `family n epsilon metric value` over every numeric or
/// boolean leaf of the report bodies, with a header line; rows are sorted.
std::string emit_plot_data(const std::vector<RunReport>& reports);

}  // namespace dcomp
