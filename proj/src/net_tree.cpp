#include "dcomp/net_tree.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/io.hpp"
#include "dcomp/tolerance.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dcomp {

int tau_for(double eps) { return 6 + ceil_log2(1.0 / eps); }

void require_epsilon(double eps) {
  if (!(eps > 0.0 && eps <= 0.25))
    throw InvalidArgument("epsilon must lie in (0, 1/4], got " + format_double(eps));
}

std::optional<Index> NetTree::find(int level, PointId v) const {
  if (level < 0 || level > top_level()) return std::nullopt;
  const auto& nodes = levels[static_cast<std::size_t>(level)];
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), v,
                                   [](const NetTreeNode& n, PointId p) { return n.label < p; });
  if (it == nodes.end() || it->label != v) return std::nullopt;
  return static_cast<Index>(it - nodes.begin());
}

std::vector<PointId> NetTree::labels(int level) const {
  std::vector<PointId> out;
  for (const auto& node : levels[static_cast<std::size_t>(level)]) out.push_back(node.label);
  return out;
}

NetTree build_net_tree(const FiniteMetric& m, double eps) {
  require_epsilon(eps);
  if (m.size() == 0) throw InvalidArgument("net tree needs at least one point");
  NetTree t;
  t.eps = eps;
  t.tau = tau_for(eps);
  t.num_points = m.size();
  t.scale = m.size() > 1 ? std::ldexp(1.0, t.tau) / m.min_distance() : 1.0;
  const FiniteMetric scaled = m.size() > 1 ? m.scaled(t.scale) : m;

  std::vector<PointId> current(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.size(); ++i) current[static_cast<std::size_t>(i)] = i;
  t.levels.emplace_back();
  for (const PointId p : current) t.levels.back().push_back({p, std::nullopt});

  for (int level = 1; current.size() > 1; ++level) {
    const double r = NetTree::radius(level);
    std::vector<PointId> next = greedy_net(scaled, current, r);
    std::vector<NetTreeNode> nodes;
    for (const PointId p : next) nodes.push_back({p, std::nullopt});
    auto& below = t.levels.back();
    for (auto& child : below) {
      const auto same = std::lower_bound(next.begin(), next.end(), child.label);
      if (same != next.end() && *same == child.label) {
        child.parent = static_cast<Index>(same - next.begin());
        continue;
      }
      // Lowest-id covering label; next is sorted ascending.
      for (std::size_t k = 0; k < next.size(); ++k) {
        if (approx_le(scaled(child.label, next[k]), r)) {
          child.parent = static_cast<Index>(k);
          break;
        }
      }
    }
    t.levels.push_back(std::move(nodes));
    current = std::move(next);
  }
  return t;
}

ValidationReport validate_net_tree(const NetTree& t, const FiniteMetric& m) {
  auto fail = [](std::string clause, std::string detail) {
    return ValidationReport{false, std::move(clause), std::move(detail)};
  };
  if (t.levels.empty()) return fail("leaf bijection", "tree has no levels");
  const double s = t.scale;
  const Index n = m.size();

  {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (const auto& leaf : t.levels[0]) {
      if (leaf.label < 0 || leaf.label >= n)
        return fail("leaf bijection", "leaf label out of range");
      ++hits[static_cast<std::size_t>(leaf.label)];
    }
    for (Index p = 0; p < n; ++p)
      if (hits[static_cast<std::size_t>(p)] != 1)
        return fail("leaf bijection", "point " + std::to_string(p) + " labels " +
                                          std::to_string(hits[static_cast<std::size_t>(p)]) +
                                          " leaves");
    if (static_cast<Index>(t.levels[0].size()) != n)
      return fail("leaf bijection", "leaf count differs from point count");
  }

  const int top = t.top_level();
  for (int i = 0; i <= top; ++i) {
    const auto& nodes = t.levels[static_cast<std::size_t>(i)];
    if (nodes.empty()) return fail("parent link", "empty level " + std::to_string(i));
    for (const auto& node : nodes) {
      if (i == top) {
        if (node.parent) return fail("parent link", "top-level node has a parent");
        continue;
      }
      const auto& above = t.levels[static_cast<std::size_t>(i + 1)];
      if (!node.parent || *node.parent < 0 || *node.parent >= static_cast<Index>(above.size()))
        return fail("parent link", "node at level " + std::to_string(i) + " lacks a parent");
    }
  }
  if (t.levels[static_cast<std::size_t>(top)].size() != 1)
    return fail("parent link", "top level is not a single root");

  for (int i = 0; i < top; ++i) {
    const auto& above = t.levels[static_cast<std::size_t>(i + 1)];
    const double r = NetTree::radius(i + 1);
    for (const auto& node : t.levels[static_cast<std::size_t>(i)]) {
      const PointId parent = above[static_cast<std::size_t>(*node.parent)].label;
      if (!approx_le(s * m(node.label, parent), r))
        return fail("parent distance", "label " + std::to_string(node.label) + " at level " +
                                           std::to_string(i) + " is farther than r_" +
                                           std::to_string(i + 1) + " from its parent");
    }
  }

  for (int i = 1; i <= top; ++i) {
    const auto& below = t.levels[static_cast<std::size_t>(i - 1)];
    const auto& nodes = t.levels[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const bool has = std::any_of(below.begin(), below.end(), [&](const NetTreeNode& c) {
        return c.parent == static_cast<Index>(k) && c.label == nodes[k].label;
      });
      if (!has)
        return fail("same-label child", "node " + std::to_string(nodes[k].label) +
                                            " at level " + std::to_string(i));
    }
  }

  for (int i = 1; i <= top; ++i) {
    for (const PointId p : t.labels(i))
      if (!t.find(i - 1, p))
        return fail("nested labels", "label " + std::to_string(p) + " appears at level " +
                                         std::to_string(i) + " but not below");
  }

  for (int i = 1; i <= top; ++i) {
    const auto labels = t.labels(i);
    const double r = NetTree::radius(i);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b)
        if (!approx_ge(s * m(labels[a], labels[b]), r))
          return fail("packing", "labels " + std::to_string(labels[a]) + " and " +
                                     std::to_string(labels[b]) + " at level " +
                                     std::to_string(i));
    for (const PointId p : t.labels(i - 1)) {
      const bool covered = std::any_of(labels.begin(), labels.end(),
                                       [&](PointId q) { return approx_le(s * m(p, q), r); });
      if (!covered)
        return fail("covering", "label " + std::to_string(p) + " uncovered at level " +
                                    std::to_string(i));
    }
  }
  return {};
}

int istar(const NetTree& t, PointId v) {
  if (v < 0 || v >= t.num_points) throw UnknownPoint("unknown point " + std::to_string(v));
  int best = 0;
  for (int i = 0; i <= t.top_level() && t.find(i, v); ++i) best = i;
  return best;
}

PointId level_ancestor_label(const NetTree& t, PointId v, int level) {
  if (level < 0 || level > t.top_level())
    throw LevelOutOfRange("level " + std::to_string(level) + " outside 0.." +
                          std::to_string(t.top_level()));
  if (v < 0 || v >= t.num_points) throw UnknownPoint("unknown point " + std::to_string(v));
  auto index = t.find(0, v);
  if (!index) throw UnknownPoint("no leaf labelled " + std::to_string(v));
  Index at = *index;
  for (int i = 0; i < level; ++i) at = *t.levels[static_cast<std::size_t>(i)][static_cast<std::size_t>(at)].parent;
  return t.levels[static_cast<std::size_t>(level)][static_cast<std::size_t>(at)].label;
}

void write_net_tree(std::ostream& out, const NetTree& t) {
  out << "nettree " << t.top_level() << ' ' << format_double(t.scale) << ' '
      << format_double(t.eps) << '\n';
  for (int i = 0; i <= t.top_level(); ++i) {
    const auto& nodes = t.levels[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      out << "node " << i << ' ' << k << ' ' << nodes[k].label << ' ';
      if (nodes[k].parent)
        out << *nodes[k].parent;
      else
        out << '-';
      out << '\n';
    }
  }
}

NetTree read_net_tree(std::istream& in) {
  NetTree t;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind) || kind[0] == '#') continue;
    if (kind == "nettree") {
      int top = 0;
      if (!(ss >> top >> t.scale >> t.eps) || top < 0) throw ParseError("bad nettree header");
      t.tau = tau_for(t.eps);
      t.levels.assign(static_cast<std::size_t>(top + 1), {});
      header = true;
      continue;
    }
    if (kind != "node" || !header) throw ParseError("unexpected line in net tree file");
    int level = 0;
    Index index = 0;
    PointId label = 0;
    std::string parent;
    if (!(ss >> level >> index >> label >> parent) || level < 0 || level > t.top_level())
      throw ParseError("bad node line");
    auto& nodes = t.levels[static_cast<std::size_t>(level)];
    if (index != static_cast<Index>(nodes.size())) throw ParseError("node lines out of order");
    NetTreeNode node{label, std::nullopt};
    if (parent != "-") node.parent = std::stoll(parent);
    nodes.push_back(node);
  }
  if (!header) throw ParseError("missing nettree header");
  t.num_points = static_cast<Index>(t.levels[0].size());
  return t;
}

}  // namespace dcomp
