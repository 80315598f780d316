#include "dcomp/convex_closure.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dcomp {

ConvexClosure::ConvexClosure(WeightedGraph g)
    : graph_(std::move(g)), dist_(shortest_path_metric(graph_).matrix()) {}

void ConvexClosure::check(const ConvPoint& p) const {
  if (p.is_vertex()) {
    if (p.vertex < 0 || p.vertex >= graph_.num_vertices())
      throw InvalidPoint("vertex " + std::to_string(p.vertex) + " out of range");
    return;
  }
  if (p.edge >= graph_.num_edges()) throw InvalidPoint("edge index out of range");
  const double len = graph_.edge(p.edge).length;
  if (!(p.offset > 0.0 && p.offset < len))
    throw InvalidPoint("offset must lie strictly inside the edge");
}

std::vector<ConvexClosure::Exit> ConvexClosure::exits(const ConvPoint& p) const {
  if (p.is_vertex()) return {{p.vertex, 0.0}};
  const Edge& e = graph_.edge(p.edge);
  return {{e.u, p.offset}, {e.v, e.length - p.offset}};
}

double ConvexClosure::distance(const ConvPoint& p, const ConvPoint& q) const {
  check(p);
  check(q);
  double best = std::numeric_limits<double>::infinity();
  if (!p.is_vertex() && p.edge == q.edge) best = std::abs(p.offset - q.offset);
  for (const Exit& a : exits(p))
    for (const Exit& b : exits(q)) best = std::min(best, a.cost + dist_(a.vertex, b.vertex) + b.cost);
  return best;
}

std::vector<VertexId> ConvexClosure::lexicographic_path(VertexId from, VertexId to) const {
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (cur != to) {
    std::vector<Index> order;
    for (const auto& inc : graph_.incident(cur)) order.push_back(inc.neighbor);
    std::sort(order.begin(), order.end());
    VertexId next = -1;
    for (const VertexId w : order) {
      const double len = graph_.edge(*graph_.find_edge(cur, w)).length;
      if (approx_eq(len + dist_(w, to), dist_(cur, to))) {
        next = w;
        break;
      }
    }
    if (next < 0 || static_cast<Index>(path.size()) > graph_.num_vertices())
      throw std::logic_error("shortest path reconstruction failed");
    path.push_back(next);
    cur = next;
  }
  return path;
}

namespace {

// The point at distance s from vertex w along edge e (w an endpoint of e).
ConvPoint along(const Edge& e, Index edge_index, VertexId w, double s) {
  if (s <= 0.0) return ConvPoint::at_vertex(w);
  if (s >= e.length) return ConvPoint::at_vertex(e.other(w));
  return ConvPoint::on_edge(edge_index, w == e.u ? s : e.length - s);
}

}  // namespace

ConvPoint ConvexClosure::toward(const ConvPoint& p, VertexId endpoint, double s) const {
  if (p.is_vertex() || s <= 0.0) return p;
  const Edge& e = graph_.edge(p.edge);
  const double offset = endpoint == e.u ? p.offset - s : p.offset + s;
  if (offset <= 0.0) return ConvPoint::at_vertex(e.u);
  if (offset >= e.length) return ConvPoint::at_vertex(e.v);
  return ConvPoint::on_edge(p.edge, offset);
}

ConvPoint ConvexClosure::geodesic_point(const ConvPoint& p, const ConvPoint& q, double s) const {
  const double total = distance(p, q);
  if (s < 0.0 || !approx_le(s, total))
    throw InvalidArgument("geodesic parameter outside [0, d(p,q)]");
  if (s <= 0.0) return p;

  const bool same_edge = !p.is_vertex() && p.edge == q.edge;
  if (same_edge && approx_eq(std::abs(p.offset - q.offset), total)) {
    const double offset = p.offset < q.offset ? p.offset + s : p.offset - s;
    return ConvPoint::on_edge(p.edge, std::clamp(offset, std::min(p.offset, q.offset),
                                                 std::max(p.offset, q.offset)));
  }

  std::vector<VertexId> best_path;
  Exit best_a{-1, 0.0};
  Exit best_b{-1, 0.0};
  for (const Exit& a : exits(p)) {
    for (const Exit& b : exits(q)) {
      if (!approx_eq(a.cost + dist_(a.vertex, b.vertex) + b.cost, total)) continue;
      auto path = lexicographic_path(a.vertex, b.vertex);
      if (best_path.empty() || path < best_path) {
        best_path = std::move(path);
        best_a = a;
        best_b = b;
      }
    }
  }

  if (s <= best_a.cost) return toward(p, best_a.vertex, s);
  s -= best_a.cost;
  for (std::size_t k = 0; k + 1 < best_path.size(); ++k) {
    const Index e = *graph_.find_edge(best_path[k], best_path[k + 1]);
    const Edge& edge = graph_.edge(e);
    if (s < edge.length) return along(edge, e, best_path[k], s);
    s -= edge.length;
  }
  const VertexId b = best_path.back();
  if (q.is_vertex() || s <= 0.0) return s <= 0.0 ? ConvPoint::at_vertex(b) : q;
  if (s >= best_b.cost) return q;
  return along(graph_.edge(q.edge), q.edge, b, s);
}

double conv_distance(const ConvexClosure& cc, const ConvPoint& p, const ConvPoint& q) {
  return cc.distance(p, q);
}

ConvPoint conv_geodesic_point(const ConvexClosure& cc, const ConvPoint& p, const ConvPoint& q,
                              double s) {
  return cc.geodesic_point(p, q, s);
}

// ---------------------------------------------------------------------------

namespace {

double near_distance(const ConvexClosure& cc, VertexId u, const Edge& e) {
  const auto& d = cc.vertex_distances();
  return std::min(d(u, e.u), d(u, e.v));
}

}  // namespace

std::vector<Index> long_edges(const ConvexClosure& cc, VertexId u, double r) {
  std::vector<Index> out;
  const auto& edges = cc.graph().edges();
  for (Index e = 0; e < static_cast<Index>(edges.size()); ++e) {
    const Edge& edge = edges[static_cast<std::size_t>(e)];
    if (approx_le(near_distance(cc, u, edge), r) && definitely_lt(r, edge.length)) out.push_back(e);
  }
  return out;
}

AuditResult long_edge_audit(const ConvexClosure& cc) {
  const WeightedGraph& g = cc.graph();
  AuditResult result;
  result.per_vertex_profile.assign(static_cast<std::size_t>(g.num_vertices()), 0);

  struct Event {
    double at;
    int delta;
    Index edge;
  };
  std::vector<Event> events;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    events.clear();
    for (Index e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      const double start = near_distance(cc, u, edge);
      if (definitely_lt(start, edge.length)) {
        events.push_back({start, +1, e});
        events.push_back({edge.length, -1, e});
      }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      return a.at != b.at ? a.at < b.at : a.delta < b.delta;
    });

    // Coordinates within tolerance form one breakpoint; closing events of a
    // breakpoint apply before the count for [breakpoint, next) is read.
    Index active = 0;
    Index best = 0;
    double best_at = 0.0;
    double best_next = 0.0;
    std::size_t k = 0;
    while (k < events.size()) {
      const double at = events[k].at;
      std::size_t end = k;
      while (end < events.size() && approx_eq(events[end].at, at)) active += events[end++].delta;
      if (active > best && end < events.size()) {
        best = active;
        best_at = at;
        best_next = events[end].at;
      }
      k = end;
    }
    result.per_vertex_profile[static_cast<std::size_t>(u)] = best;
    if (best > result.max_count) {
      result.max_count = best;
      result.witness_vertex = u;
      result.witness_radius = 0.5 * (best_at + best_next);
    }
  }
  if (result.max_count > 0) {
    result.witness_edges = long_edges(cc, result.witness_vertex, result.witness_radius);
    if (static_cast<Index>(result.witness_edges.size()) != result.max_count)
      throw std::logic_error("long-edge witness does not re-verify");
  }
  return result;
}

PackingCertificate certify_packing(const ConvexClosure& cc, std::vector<ConvPoint> points,
                                   const ConvPoint& center, double radius, double min_separation) {
  auto slack = [](double x) { return 1e-9 * std::max(1.0, std::abs(x)); };
  PackingCertificate cert;
  cert.points = std::move(points);
  cert.center = center;
  cert.radius = radius;
  cert.min_separation = min_separation;
  cert.min_pairwise = std::numeric_limits<double>::infinity();
  cert.max_pairwise = 0.0;
  bool ok = true;
  for (std::size_t a = 0; a < cert.points.size(); ++a) {
    const double dc = cc.distance(center, cert.points[a]);
    cert.max_center_distance = std::max(cert.max_center_distance, dc);
    ok = ok && dc <= radius + slack(radius);
    for (std::size_t b = a + 1; b < cert.points.size(); ++b) {
      const double d = cc.distance(cert.points[a], cert.points[b]);
      cert.min_pairwise = std::min(cert.min_pairwise, d);
      cert.max_pairwise = std::max(cert.max_pairwise, d);
      ok = ok && d >= min_separation - slack(min_separation);
    }
  }
  if (cert.points.size() < 2) cert.min_pairwise = cert.max_pairwise = 0.0;
  cert.verified = ok && !cert.points.empty();
  const bool certifies = min_separation >= radius / 2.0 - slack(radius);
  cert.dim_lower = cert.verified && certifies
                       ? 0.5 * std::log2(static_cast<double>(cert.points.size()))
                       : 0.0;
  return cert;
}

PackingCertificate long_edge_packing_witness(const ConvexClosure& cc, VertexId u, double r) {
  const auto edges = long_edges(cc, u, r);
  if (edges.empty())
    throw EmptyLongEdgeSet("no long edges at vertex " + std::to_string(u) + " for this radius");
  const auto& d = cc.vertex_distances();
  std::vector<ConvPoint> points;
  for (const Index e : edges) {
    const Edge& edge = cc.graph().edge(e);
    const bool near_is_u = d(u, edge.u) <= d(u, edge.v);
    points.push_back(ConvPoint::on_edge(e, near_is_u ? r / 2.0 : edge.length - r / 2.0));
  }
  return certify_packing(cc, std::move(points), ConvPoint::at_vertex(u), 2.0 * r, r);
}

std::vector<ConvPoint> conv_sample_points(const WeightedGraph& g, Index samples_per_edge) {
  if (samples_per_edge < 0) throw InvalidArgument("samples_per_edge must be nonnegative");
  std::vector<ConvPoint> points;
  for (VertexId v = 0; v < g.num_vertices(); ++v) points.push_back(ConvPoint::at_vertex(v));
  for (Index e = 0; e < g.num_edges(); ++e) {
    const double len = g.edge(e).length;
    for (Index j = 1; j <= samples_per_edge; ++j)
      points.push_back(ConvPoint::on_edge(
          e, static_cast<double>(j) * len / static_cast<double>(samples_per_edge + 1)));
  }
  return points;
}

FiniteMetric conv_sample_metric(const ConvexClosure& cc, Index samples_per_edge) {
  const auto points = conv_sample_points(cc.graph(), samples_per_edge);
  const auto n = static_cast<Index>(points.size());
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      dist(i, j) = dist(j, i) = cc.distance(points[static_cast<std::size_t>(i)],
                                            points[static_cast<std::size_t>(j)]);
  return FiniteMetric(std::move(dist));
}

DimensionEstimate sampled_conv_dimension(const ConvexClosure& cc, Index samples_per_edge,
                                         Index exact_max_n) {
  return estimate_dimension(conv_sample_metric(cc, samples_per_edge), exact_max_n);
}

}  // namespace dcomp
