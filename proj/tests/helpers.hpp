#pragma once

#include "dcomp/metric.hpp"
#include "oracles.hpp"

#include <vector>

namespace testutil {

inline dcomp::WeightedGraph to_graph(int n, const std::vector<oracle::Edge>& edges) {
  dcomp::WeightedGraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.len);
  return g;
}

inline dcomp::FiniteMetric uniform_metric(int n, double d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, d);
  m.diagonal().setZero();
  return dcomp::FiniteMetric(m);
}

inline dcomp::FiniteMetric two_points(double d) { return uniform_metric(2, d); }

inline dcomp::WeightedGraph path_graph(const std::vector<double>& lengths) {
  dcomp::WeightedGraph g(static_cast<dcomp::Index>(lengths.size()) + 1);
  for (std::size_t i = 0; i < lengths.size(); ++i)
    g.add_edge(static_cast<dcomp::Index>(i), static_cast<dcomp::Index>(i) + 1, lengths[i]);
  return g;
}

inline dcomp::WeightedGraph complete_unit_graph(int n) {
  dcomp::WeightedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, 1.0);
  return g;
}

}  // namespace testutil
