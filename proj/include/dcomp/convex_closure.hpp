#pragma once

#include "dcomp/dimension.hpp"
#include "dcomp/metric.hpp"

#include <map>
#include <vector>

namespace dcomp {

/// A point of the convex closure: a vertex, or the point at `offset` along an
/// edge measured from the edge's lower-id endpoint, 0 < offset < length.
struct ConvPoint {
  VertexId vertex = -1;
  Index edge = -1;
  double offset = 0.0;

  static ConvPoint at_vertex(VertexId v) { return {v, -1, 0.0}; }
  static ConvPoint on_edge(Index e, double x) { return {-1, e, x}; }
  bool is_vertex() const { return edge < 0; }
  bool operator==(const ConvPoint&) const = default;
};

/// The continuous metric of a connected weighted graph whose edges are
/// segments of their lengths. Holds the all-pairs vertex distances.
class ConvexClosure {
 public:
  explicit ConvexClosure(WeightedGraph g);

  const WeightedGraph& graph() const { return graph_; }
  const Eigen::MatrixXd& vertex_distances() const { return dist_; }

  /// Throws InvalidPoint for unknown vertices/edges or offsets outside (0, l).
  void check(const ConvPoint& p) const;
  double distance(const ConvPoint& p, const ConvPoint& q) const;

  /// A point at distance s from p and d(p,q) - s from q on a shortest route.
  /// Among equally short routes the one with the lexicographically smallest
  /// vertex sequence is walked.
  ConvPoint geodesic_point(const ConvPoint& p, const ConvPoint& q, double s) const;

 private:
  struct Exit {
    VertexId vertex;
    double cost;
  };
  std::vector<Exit> exits(const ConvPoint& p) const;
  std::vector<VertexId> lexicographic_path(VertexId from, VertexId to) const;
  ConvPoint toward(const ConvPoint& p, VertexId endpoint, double s) const;

  WeightedGraph graph_;
  Eigen::MatrixXd dist_;
};

double conv_distance(const ConvexClosure& cc, const ConvPoint& p, const ConvPoint& q);
ConvPoint conv_geodesic_point(const ConvexClosure& cc, const ConvPoint& p, const ConvPoint& q,
                              double s);

/// Long edges with respect to (u, r): length > r and an endpoint within r.
std::vector<Index> long_edges(const ConvexClosure& cc, VertexId u, double r);

struct AuditResult {
  Index max_count = 0;
  VertexId witness_vertex = 0;
  double witness_radius = 0.0;
  std::vector<Index> witness_edges;  // edge indices
  std::vector<Index> per_vertex_profile;
};

/// Maximum of |L_u(r)| over all vertices and radii, by sweeping the
/// half-open intervals [min endpoint distance, length) of every edge. The
/// witness radius is the midpoint of the first maximising interval.
AuditResult long_edge_audit(const ConvexClosure& cc);

/// Points verified to lie in B(center, radius) with pairwise distances at
/// least min_separation. When min_separation >= radius/2 the set certifies
/// a doubling dimension of at least log2|points| / 2.
struct PackingCertificate {
  std::vector<ConvPoint> points;
  ConvPoint center;
  double radius = 0.0;
  double min_separation = 0.0;
  double min_pairwise = 0.0;
  double max_pairwise = 0.0;
  double max_center_distance = 0.0;
  bool verified = false;
  double dim_lower = 0.0;
};

/// Re-measures every claimed distance. Absolute slack 1e-9 on both checks.
PackingCertificate certify_packing(const ConvexClosure& cc, std::vector<ConvPoint> points,
                                   const ConvPoint& center, double radius, double min_separation);

/// W = { e[r/2 from the endpoint nearer u] : e in L_u(r) }, certified inside
/// B(u, 2r) with pairwise separation r. Throws EmptyLongEdgeSet.
PackingCertificate long_edge_packing_witness(const ConvexClosure& cc, VertexId u, double r);

/// Vertices followed by samples_per_edge evenly spaced interior points of every
/// edge, in edge order.
std::vector<ConvPoint> conv_sample_points(const WeightedGraph& g, Index samples_per_edge);
FiniteMetric conv_sample_metric(const ConvexClosure& cc, Index samples_per_edge);

DimensionEstimate sampled_conv_dimension(const ConvexClosure& cc, Index samples_per_edge,
                                         Index exact_max_n = kDefaultExactMaxN);

}  // namespace dcomp
