#include "dcomp/spanner.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/io.hpp"
#include "dcomp/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace dcomp {

char to_char(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::A:
      return 'A';
    case EdgeKind::B:
      return 'B';
    case EdgeKind::C:
      return 'C';
  }
  return '?';
}

int donation_threshold(double eps) {
  return static_cast<int>(std::ceil(7.0 * std::log2(1.0 / eps) - kRelTol));
}

BaseEdgeSets build_base_edge_sets(const FiniteMetric& m, const NetTree& t, double eps) {
  const double c = c_eps(eps);
  const int top = t.top_level();
  BaseEdgeSets sets(static_cast<std::size_t>(std::max(top, 0) + 1));
  const Index n = m.size();
  std::vector<char> taken(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= top; ++i) {
    const auto labels = t.labels(i);
    const double reach = c * NetTree::radius(i);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        const PointId u = labels[a];
        const PointId v = labels[b];
        auto& seen = taken[static_cast<std::size_t>(u * n + v)];
        const double d = t.scale * m(u, v);
        if (seen || !approx_le(d, reach)) continue;
        // Nested labels put every shorter pair in an earlier set.
        if (approx_le(d, c * NetTree::radius(i - 1)))
          throw std::logic_error("base edge below its level bracket");
        seen = 1;
        sets[static_cast<std::size_t>(i)].push_back({u, v, i, d});
      }
    }
  }
  return sets;
}

std::vector<DirectedEdge> assign_directions(const BaseEdgeSets& sets, const NetTree& t) {
  std::vector<int> star(static_cast<std::size_t>(t.num_points));
  for (Index p = 0; p < t.num_points; ++p) star[static_cast<std::size_t>(p)] = istar(t, p);
  std::vector<DirectedEdge> out;
  for (const auto& level : sets) {
    for (const BaseEdge& e : level) {
      const int su = star[static_cast<std::size_t>(e.u)];
      const int sv = star[static_cast<std::size_t>(e.v)];
      const bool toward_v = su < sv || (su == sv && e.v > e.u);
      out.push_back(toward_v ? DirectedEdge{e.u, e.v, e.level} : DirectedEdge{e.v, e.u, e.level});
    }
  }
  return out;
}

Spanner donate_edges(const std::vector<DirectedEdge>& directed, const FiniteMetric& m, double eps) {
  const int keep = donation_threshold(eps);
  const Index n = m.size();

  // In-edges of every vertex, grouped by level.
  std::vector<std::map<int, std::vector<PointId>>> groups(static_cast<std::size_t>(n));
  for (const auto& e : directed) groups[static_cast<std::size_t>(e.to)][e.level].push_back(e.from);

  std::vector<SpannerEdge> raw;
  for (PointId x = 0; x < n; ++x) {
    std::vector<std::pair<int, std::vector<PointId>>> ordered;
    for (auto& [level, sources] : groups[static_cast<std::size_t>(x)]) {
      std::sort(sources.begin(), sources.end());
      ordered.emplace_back(level, sources);
    }
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      const auto& [level, sources] = ordered[j];
      if (j < static_cast<std::size_t>(keep)) {
        for (const PointId y : sources)
          raw.push_back({y, x, m(y, x), level, EdgeKind::A, EdgeKind::B, std::nullopt});
        continue;
      }
      const PointId u = ordered[j - static_cast<std::size_t>(keep)].second.front();
      for (const PointId y : sources)
        raw.push_back({y, u, m(y, u), level, EdgeKind::A, EdgeKind::C, x});
    }
  }

  // Merge unordered duplicates, keeping the shorter (first on ties).
  std::map<std::pair<PointId, PointId>, std::size_t> index;
  std::vector<SpannerEdge> merged;
  for (const auto& e : raw) {
    const auto key = std::minmax(e.from, e.to);
    const auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, merged.size());
      merged.push_back(e);
    } else if (e.length < merged[it->second].length) {
      merged[it->second] = e;
    }
  }

  Spanner s;
  s.eps = eps;
  s.graph = WeightedGraph(n);
  for (const auto& e : merged) s.graph.add_edge(e.from, e.to, e.length);
  s.edges = std::move(merged);
  s.max_degree = s.graph.max_degree();
  return s;
}

Spanner build_spanner(const FiniteMetric& m, double eps) {
  require_epsilon(eps);
  NetTree t = build_net_tree(m, eps);
  const BaseEdgeSets sets = build_base_edge_sets(m, t, eps);
  Spanner s = donate_edges(assign_directions(sets, t), m, eps);
  s.net_tree = std::move(t);
  s.stretch = verify_stretch(m, shortest_path_metric(s.graph), eps, false);
  return s;
}

void write_spanner(std::ostream& out, const Spanner& s) {
  write_graph(out, s.graph);
  for (const auto& e : s.edges) {
    out << "meta " << e.from << ' ' << e.to << " level=" << e.level
        << " kind=" << to_char(e.kind_to) << " donor=";
    if (e.donor)
      out << *e.donor;
    else
      out << '-';
    out << '\n';
  }
}

}  // namespace dcomp
