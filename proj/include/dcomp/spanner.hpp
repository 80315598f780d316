#pragma once

#include "dcomp/metric.hpp"
#include "dcomp/net_tree.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace dcomp {

/// A pair of net points that entered the spanner at the given level.
struct BaseEdge {
  PointId u = 0;  // u < v
  PointId v = 0;
  int level = 0;
  double scaled_length = 0.0;
};

/// E_1..E_top, indexed by level (entry 0 is always empty).
using BaseEdgeSets = std::vector<std::vector<BaseEdge>>;

BaseEdgeSets build_base_edge_sets(const FiniteMetric& m, const NetTree& t, double eps);

struct DirectedEdge {
  PointId from = 0;
  PointId to = 0;
  int level = 0;
};

/// Every base edge points at the endpoint with the larger istar; ties point at
/// the larger id. Output is ordered by level, then by the base edge order.
std::vector<DirectedEdge> assign_directions(const BaseEdgeSets& sets, const NetTree& t);

enum class EdgeKind { A, B, C };
char to_char(EdgeKind kind);

/// Oriented from the source (type A at `from`) to the receiving endpoint.
struct SpannerEdge {
  PointId from = 0;
  PointId to = 0;
  double length = 0.0;  // metric distance, input units
  int level = 0;        // level of the originating base pair
  EdgeKind kind_from = EdgeKind::A;
  EdgeKind kind_to = EdgeKind::B;
  std::optional<PointId> donor;
};

struct Spanner {
  WeightedGraph graph;
  std::vector<SpannerEdge> edges;
  double eps = 0.25;
  NetTree net_tree;
  Index max_degree = 0;
  StretchReport stretch;
};

/// Number of lowest in-edge level groups a vertex keeps untouched:
/// ceil(7 log2(1/eps)).
int donation_threshold(double eps);

/// Degree-reduction pass: in-edges of each vertex are grouped by level and the
/// groups beyond the threshold are rerouted to a lower-level neighbour.
Spanner donate_edges(const std::vector<DirectedEdge>& directed, const FiniteMetric& m, double eps);

/// Net tree, base edges, directions and donation; the stretch of the result is
/// measured against m and stored in the returned spanner.
Spanner build_spanner(const FiniteMetric& m, double eps);

/// Graph file followed by `meta <from> <to> level=<i> kind=<B|C> donor=<id|->`
/// lines; kind is the edge's type at the receiving endpoint (the source side
/// is always type A).
void write_spanner(std::ostream& out, const Spanner& s);

}  // namespace dcomp
