#pragma once

#include "dcomp/metric.hpp"

#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dcomp {

/// 6 + ceil(log2(1/eps)): the input is rescaled so that its smallest
/// distance is exactly 2^tau.
int tau_for(double eps);

/// 4 + 32/eps, the pair-distance multiplier for each net level.
inline double c_eps(double eps) { return 4.0 + 32.0 / eps; }

/// Throws InvalidArgument unless 0 < eps <= 1/4.
void require_epsilon(double eps);

struct NetTreeNode {
  PointId label = 0;
  std::optional<Index> parent;  // index into the next level up; empty at the top
};

/// Hierarchical net tree over a finite metric. Level i holds the nodes N_i,
/// sorted by label; level 0 has one leaf per point and the top level has a
/// single node. Radii are r_i = 2^i in scaled units (input distance * scale).
struct NetTree {
  double eps = 0.25;
  int tau = 8;
  double scale = 1.0;
  Index num_points = 0;
  std::vector<std::vector<NetTreeNode>> levels;

  int top_level() const { return static_cast<int>(levels.size()) - 1; }
  static double radius(int level) { return std::ldexp(1.0, level); }

  /// Position of the node labelled v on the given level, if any.
  std::optional<Index> find(int level, PointId v) const;
  std::vector<PointId> labels(int level) const;
};

NetTree build_net_tree(const FiniteMetric& m, double eps);

struct ValidationReport {
  bool pass = true;
  std::string clause;  // first violated clause, empty on pass
  std::string detail;
};

/// Checks every net-tree invariant. Clauses, in checking order:
/// "leaf bijection", "parent link", "parent distance", "same-label child",
/// "nested labels", "packing", "covering".
ValidationReport validate_net_tree(const NetTree& t, const FiniteMetric& m);

/// Largest level whose labels contain v. Throws UnknownPoint.
int istar(const NetTree& t, PointId v);

/// Label of the level-i ancestor of the leaf labelled v. Throws
/// LevelOutOfRange / UnknownPoint.
PointId level_ancestor_label(const NetTree& t, PointId v, int level);

/// Lines `node <level> <index> <label> <parent-index-or->`, preceded by a
/// `nettree <top> <scale> <eps>` header.
void write_net_tree(std::ostream& out, const NetTree& t);
NetTree read_net_tree(std::istream& in);

}  // namespace dcomp
