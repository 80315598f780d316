#include "dcomp/tree_completion.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/io.hpp"
#include "dcomp/tolerance.hpp"

#include <cmath>
#include <numeric>
#include <ostream>

namespace dcomp {

TailedGraph attach_tails(const WeightedGraph& g, const NetTree& t) {
  if (t.num_points != g.num_vertices())
    throw SizeMismatch("net tree and graph disagree on the vertex count");
  TailedGraph out;
  out.graph = g;
  out.scale = t.scale;
  out.tails.resize(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    auto& tail = out.tails[static_cast<std::size_t>(u)];
    tail.push_back(u);
    const int height = istar(t, u);
    for (int j = 1; j <= height; ++j) {
      const VertexId next = out.graph.add_vertex();
      out.graph.add_edge(tail.back(), next, std::ldexp(1.0, j) / t.scale);
      tail.push_back(next);
    }
  }
  return out;
}

int lift_level(double scaled_length, double eps) {
  const double c = c_eps(eps);
  if (approx_le(scaled_length, c))
    throw LevelUnderflow("edge of scaled length " + format_double(scaled_length) +
                         " is not longer than C_eps");
  int level = 1;
  while (!approx_le(scaled_length, c * std::ldexp(1.0, level))) ++level;
  return level;
}

Completion lift_edges(const TailedGraph& tailed, const WeightedGraph& g, const NetTree& t,
                      double eps) {
  Completion c;
  c.scale = tailed.scale;
  c.eps = eps;
  c.num_original = g.num_vertices();
  c.input_is_tree = g.is_tree();
  c.tails = tailed.tails;
  c.output = WeightedGraph(tailed.graph.num_vertices());
  for (const auto& tail : tailed.tails)
    for (std::size_t j = 1; j < tail.size(); ++j)
      c.output.add_edge(tail[j - 1], tail[j], std::ldexp(1.0, static_cast<int>(j)) / c.scale);

  for (const Edge& e : g.edges()) {
    const int level = lift_level(e.length * c.scale, eps);
    if (level > t.top_level())
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} is longer than the net tree spans");
    LiftedEdge lifted;
    lifted.u = e.u;
    lifted.v = e.v;
    lifted.level = level;
    lifted.hat_u = level_ancestor_label(t, e.u, level);
    lifted.hat_v = level_ancestor_label(t, e.v, level);
    lifted.new_u = c.tails[static_cast<std::size_t>(lifted.hat_u)].at(static_cast<std::size_t>(level));
    lifted.new_v = c.tails[static_cast<std::size_t>(lifted.hat_v)].at(static_cast<std::size_t>(level));
    lifted.length = e.length;
    if (const auto existing = c.output.find_edge(lifted.new_u, lifted.new_v)) {
      if (e.length < c.output.edge(*existing).length) c.output.set_length(*existing, e.length);
    } else {
      c.output.add_edge(lifted.new_u, lifted.new_v, e.length);
    }
    c.lifted.push_back(lifted);
  }
  return c;
}

Completion complete_tree(const WeightedGraph& g, double eps) {
  require_epsilon(eps);
  if (g.num_vertices() == 0) throw InvalidArgument("empty graph");
  const FiniteMetric m = shortest_path_metric(g);
  NetTree t = build_net_tree(m, eps);
  Completion c = lift_edges(attach_tails(g, t), g, t, eps);
  c.net_tree = std::move(t);
  return c;
}

CompletionReport verify_completion(const WeightedGraph& g, const Completion& c, double eps,
                                   const CompletionOptions& options) {
  CompletionReport report;
  std::vector<VertexId> originals(static_cast<std::size_t>(g.num_vertices()));
  std::iota(originals.begin(), originals.end(), VertexId{0});
  report.stretch = verify_stretch(shortest_path_metric(g),
                                  shortest_path_metric(c.output, originals), eps, true);
  report.input_is_tree = g.is_tree();
  if (report.input_is_tree) report.output_is_tree = c.output.is_tree();

  const ConvexClosure cc(c.output);
  report.audit = long_edge_audit(cc);
  report.conv_sample_points =
      c.output.num_vertices() + options.samples_per_edge * c.output.num_edges();
  if (report.conv_sample_points <= options.max_sample_points)
    report.conv_dimension = sampled_conv_dimension(cc, options.samples_per_edge, options.exact_max_n);

  report.pass = report.stretch.pass && report.output_is_tree.value_or(true);
  return report;
}

void write_completion(std::ostream& out, const Completion& c) {
  write_graph(out, c.output);
  for (std::size_t u = 0; u < c.tails.size(); ++u)
    for (std::size_t j = 1; j < c.tails[u].size(); ++j)
      out << "tail " << u << ' ' << j << ' ' << c.tails[u][j] << '\n';
  for (const auto& e : c.lifted)
    out << "lift " << e.u << ' ' << e.v << ' ' << e.level << ' ' << e.new_u << ' ' << e.new_v
        << '\n';
}

}  // namespace dcomp
