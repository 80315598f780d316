#include "dcomp/metric.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/tolerance.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace dcomp {

FiniteMetric::FiniteMetric(Eigen::MatrixXd dist) : dist_(std::move(dist)) {
  if (dist_.rows() != dist_.cols()) throw InvalidMetric("distance matrix is not square");
  const Index n = dist_.rows();
  for (Index i = 0; i < n; ++i) {
    if (dist_(i, i) != 0.0) throw InvalidMetric("nonzero diagonal at " + std::to_string(i));
    for (Index j = i + 1; j < n; ++j) {
      const double d = dist_(i, j);
      if (!std::isfinite(d) || d <= 0.0)
        throw InvalidMetric("distance between " + std::to_string(i) + " and " +
                            std::to_string(j) + " is not positive and finite");
      if (d != dist_(j, i)) throw InvalidMetric("distance matrix is not symmetric");
    }
  }
}

double FiniteMetric::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (Index j = 1; j < size(); ++j)
    for (Index i = 0; i < j; ++i) best = std::min(best, dist_(i, j));
  return best;
}

double FiniteMetric::diameter() const { return size() == 0 ? 0.0 : dist_.maxCoeff(); }

FiniteMetric FiniteMetric::restricted(std::span<const PointId> points) const {
  const auto k = static_cast<Index>(points.size());
  Eigen::MatrixXd sub(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) sub(a, b) = dist_(points[a], points[b]);
  return FiniteMetric(std::move(sub));
}

FiniteMetric FiniteMetric::scaled(double factor) const {
  if (!(factor > 0.0)) throw InvalidArgument("scale factor must be positive");
  return FiniteMetric(dist_ * factor);
}

bool FiniteMetric::satisfies_triangle_inequality() const {
  const Index n = size();
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (!approx_le(dist_(i, j), dist_(i, k) + dist_(k, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------

WeightedGraph::WeightedGraph(Index n_vertices) {
  if (n_vertices < 0) throw InvalidGraph("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n_vertices));
}

VertexId WeightedGraph::add_vertex() {
  adjacency_.emplace_back();
  return num_vertices() - 1;
}

void WeightedGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices())
    throw InvalidGraph("vertex " + std::to_string(v) + " out of range");
}

Index WeightedGraph::add_edge(VertexId u, VertexId v, double length) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
  if (!std::isfinite(length) || length <= 0.0)
    throw InvalidGraph("edge length must be positive and finite");
  if (u > v) std::swap(u, v);
  if (lookup_.contains({u, v}))
    throw InvalidGraph("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  const Index e = num_edges();
  edges_.push_back({u, v, length});
  adjacency_[static_cast<std::size_t>(u)].push_back({v, e});
  adjacency_[static_cast<std::size_t>(v)].push_back({u, e});
  lookup_.emplace(std::make_pair(u, v), e);
  return e;
}

std::optional<Index> WeightedGraph::find_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  const auto it = lookup_.find({u, v});
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void WeightedGraph::set_length(Index e, double length) {
  if (e < 0 || e >= num_edges()) throw InvalidGraph("edge index out of range");
  if (!std::isfinite(length) || length <= 0.0)
    throw InvalidGraph("edge length must be positive and finite");
  edges_[static_cast<std::size_t>(e)].length = length;
}

void WeightedGraph::remove_edge(VertexId u, VertexId v) {
  const auto found = find_edge(u, v);
  if (!found) throw InvalidGraph("no edge to remove");
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (Index e = 0; e < num_edges(); ++e)
    if (e != *found) kept.push_back(edges_[static_cast<std::size_t>(e)]);
  const Index n = num_vertices();
  *this = WeightedGraph(n);
  for (const Edge& edge : kept) add_edge(edge.u, edge.v, edge.length);
}

Index WeightedGraph::max_degree() const {
  Index best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool WeightedGraph::is_connected() const {
  if (num_vertices() <= 1) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  Index reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : incident(v)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == num_vertices();
}

// ---------------------------------------------------------------------------

Eigen::VectorXd dijkstra(const WeightedGraph& g, VertexId source) {
  const Index n = g.num_vertices();
  Eigen::VectorXd dist = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist(source) = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist(v)) continue;
    for (const auto& inc : g.incident(v)) {
      const double nd = d + g.edge(inc.edge).length;
      if (nd < dist(inc.neighbor)) {
        dist(inc.neighbor) = nd;
        queue.emplace(nd, inc.neighbor);
      }
    }
  }
  return dist;
}

namespace {

[[noreturn]] void throw_disconnected(const Eigen::VectorXd& from_zero) {
  // The first unreachable vertex represents the second component.
  for (Index v = 0; v < from_zero.size(); ++v)
    if (!std::isfinite(from_zero(v))) throw DisconnectedGraph(0, v);
  throw DisconnectedGraph(0, 0);
}

}  // namespace

FiniteMetric shortest_path_metric(const WeightedGraph& g) {
  const Index n = g.num_vertices();
  Eigen::MatrixXd dist(n, n);
  for (VertexId s = 0; s < n; ++s) {
    Eigen::VectorXd row = dijkstra(g, s);
    if (s == 0 && !row.allFinite()) throw_disconnected(row);
    dist.row(s) = row.transpose();
  }
  // Dijkstra sums edges in different orders from each side; keep the matrix
  // exactly symmetric.
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) dist(j, i) = dist(i, j) = std::min(dist(i, j), dist(j, i));
  return FiniteMetric(std::move(dist));
}

FiniteMetric shortest_path_metric(const WeightedGraph& g, std::span<const VertexId> points) {
  const auto k = static_cast<Index>(points.size());
  Eigen::MatrixXd dist(k, k);
  for (Index a = 0; a < k; ++a) {
    const Eigen::VectorXd row = dijkstra(g, points[a]);
    for (Index b = 0; b < k; ++b) {
      const double d = row(points[b]);
      if (!std::isfinite(d)) throw DisconnectedGraph(points[a], points[b]);
      dist(a, b) = d;
    }
  }
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) dist(j, i) = dist(i, j) = std::min(dist(i, j), dist(j, i));
  return FiniteMetric(std::move(dist));
}

WeightedGraph complete_graph(const FiniteMetric& m) {
  WeightedGraph g(m.size());
  for (Index i = 0; i < m.size(); ++i)
    for (Index j = i + 1; j < m.size(); ++j) g.add_edge(i, j, m(i, j));
  return g;
}

std::vector<PointId> greedy_net(const FiniteMetric& m, std::span<const PointId> subset, double r) {
  std::vector<PointId> net;
  for (const PointId p : subset) {
    const bool far = std::all_of(net.begin(), net.end(),
                                 [&](PointId q) { return approx_ge(m(p, q), r); });
    if (far) net.push_back(p);
  }
  return net;
}

std::vector<PointId> greedy_net(const FiniteMetric& m, double r) {
  std::vector<PointId> all(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return greedy_net(m, all, r);
}

StretchReport verify_stretch(const FiniteMetric& base, const FiniteMetric& test, double eps,
                             bool allow_contraction) {
  if (base.size() != test.size())
    throw SizeMismatch("stretch check on metrics of size " + std::to_string(base.size()) +
                       " and " + std::to_string(test.size()));
  StretchReport report;
  const double hi = 1.0 + eps;
  const double lo = allow_contraction ? 1.0 / (1.0 + eps) : 1.0;
  bool first = true;
  for (Index i = 0; i < base.size(); ++i) {
    for (Index j = i + 1; j < base.size(); ++j) {
      const double ratio = test(i, j) / base(i, j);
      if (first || ratio < report.min_ratio) {
        report.min_ratio = ratio;
        report.min_pair = {i, j};
      }
      if (first || ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.max_pair = {i, j};
      }
      first = false;
      if (report.pass && (!approx_le(ratio, hi) || !approx_ge(ratio, lo))) {
        report.pass = false;
        report.violation = std::make_pair(i, j);
      }
    }
  }
  return report;
}

}  // namespace dcomp
