#pragma once

#include "dcomp/metric.hpp"

#include <iosfwd>
#include <string>

namespace dcomp {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

// Metric files: header `metric <n>`, then `d <i> <j> <value>` for every i < j.
// Graph files: header `graph <n>`, then `e <u> <v> <length>`.
// Blank lines and `#` comments are ignored. Graph readers also skip the
// sidecar records (`meta`, `tail`, `lift`) that spanner and completion files
// append.
void write_metric(std::ostream& out, const FiniteMetric& m);
FiniteMetric read_metric(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& in);

FiniteMetric read_metric_file(const std::string& path);
WeightedGraph read_graph_file(const std::string& path);

}  // namespace dcomp
