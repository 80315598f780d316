#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dcomp {

using Index = Eigen::Index;
using PointId = Index;
using VertexId = Index;

/// A finite metric space on points 0..n-1, stored as a dense symmetric
/// distance matrix.
class FiniteMetric {
 public:
  FiniteMetric() = default;

  /// Validates symmetry, a zero diagonal and strictly positive off-diagonal
  /// entries. The triangle inequality is O(n^3) and is checked separately by
  /// satisfies_triangle_inequality().
  explicit FiniteMetric(Eigen::MatrixXd dist);

  Index size() const { return dist_.rows(); }
  double operator()(PointId i, PointId j) const { return dist_(i, j); }
  const Eigen::MatrixXd& matrix() const { return dist_; }

  double min_distance() const;
  double diameter() const;

  /// Submetric on the listed points, re-indexed 0..k-1 in the given order.
  FiniteMetric restricted(std::span<const PointId> points) const;
  FiniteMetric scaled(double factor) const;

  bool satisfies_triangle_inequality() const;

 private:
  Eigen::MatrixXd dist_;
};

struct Edge {
  VertexId u = 0;  // always u < v
  VertexId v = 0;
  double length = 0.0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected graph with positive edge lengths. Edges are stored with their
/// endpoints in ascending order; no self-loops, no parallel edges.
class WeightedGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    Index edge;
  };

  WeightedGraph() = default;
  explicit WeightedGraph(Index n_vertices);

  Index num_vertices() const { return static_cast<Index>(adjacency_.size()); }
  Index num_edges() const { return static_cast<Index>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Index e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Incidence>& incident(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  VertexId add_vertex();
  /// Returns the new edge's index. Throws InvalidGraph on self-loops,
  /// duplicate pairs, out-of-range ids or non-positive lengths.
  Index add_edge(VertexId u, VertexId v, double length);
  std::optional<Index> find_edge(VertexId u, VertexId v) const;
  void set_length(Index e, double length);
  void remove_edge(VertexId u, VertexId v);

  Index degree(VertexId v) const { return static_cast<Index>(incident(v).size()); }
  Index max_degree() const;
  bool is_connected() const;
  bool is_tree() const { return is_connected() && num_edges() + 1 == num_vertices(); }

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::map<std::pair<VertexId, VertexId>, Index> lookup_;
};

/// Single-source shortest path lengths; unreachable vertices get +inf.
Eigen::VectorXd dijkstra(const WeightedGraph& g, VertexId source);

/// All-pairs shortest path metric. Throws DisconnectedGraph.
FiniteMetric shortest_path_metric(const WeightedGraph& g);

/// Shortest path metric of g restricted to the listed vertices (re-indexed in
/// the given order). Only |points| Dijkstra runs are made.
FiniteMetric shortest_path_metric(const WeightedGraph& g, std::span<const VertexId> points);

/// Complete graph whose edge lengths are the metric distances.
WeightedGraph complete_graph(const FiniteMetric& m);

/// Greedy r-net: points scanned in ascending order and kept when at distance
/// >= r from every point kept so far.
std::vector<PointId> greedy_net(const FiniteMetric& m, double r);

/// Greedy r-net of a subset of points, scanned in the order given.
std::vector<PointId> greedy_net(const FiniteMetric& m, std::span<const PointId> subset, double r);

struct StretchReport {
  double min_ratio = 1.0;
  double max_ratio = 1.0;
  std::pair<PointId, PointId> min_pair{0, 0};
  std::pair<PointId, PointId> max_pair{0, 0};
  bool pass = true;
  std::optional<std::pair<PointId, PointId>> violation;
};

/// Ratios test/base over all pairs. Strict mode accepts [1, 1+eps]; with
/// contraction allowed, [1/(1+eps), 1+eps]. Throws SizeMismatch.
StretchReport verify_stretch(const FiniteMetric& base, const FiniteMetric& test, double eps,
                             bool allow_contraction);

}  // namespace dcomp
