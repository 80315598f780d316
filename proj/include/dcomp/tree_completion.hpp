#pragma once

#include "dcomp/convex_closure.hpp"
#include "dcomp/metric.hpp"
#include "dcomp/net_tree.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace dcomp {

/// Input graph with an exponential tail hanging off every vertex u: a path
/// u = u_[0], u_[1], ..., u_[istar(u)] whose j-th edge has scaled length 2^j.
struct TailedGraph {
  WeightedGraph graph;                    // input vertices keep their ids
  std::vector<std::vector<VertexId>> tails;  // tails[u][j] = id of u_[j]
  double scale = 1.0;
};

TailedGraph attach_tails(const WeightedGraph& g, const NetTree& t);

struct LiftedEdge {
  VertexId u = 0;  // original endpoints
  VertexId v = 0;
  int level = 0;
  PointId hat_u = 0;  // level ancestors of u and v
  PointId hat_v = 0;
  VertexId new_u = 0;  // hat_u_[level], hat_v_[level]
  VertexId new_v = 0;
  double length = 0.0;  // input units
};

struct Completion {
  WeightedGraph output;
  std::vector<std::vector<VertexId>> tails;
  std::vector<LiftedEdge> lifted;
  double scale = 1.0;
  double eps = 0.25;
  Index num_original = 0;
  bool input_is_tree = false;
  NetTree net_tree;
};

/// Level i with scaled length in (C_eps 2^(i-1), C_eps 2^i]. Throws
/// LevelUnderflow when the length is at most C_eps.
int lift_level(double scaled_length, double eps);

/// Replaces every input edge {u,v} by {hat_u_[i], hat_v_[i]} of the same
/// length, i = lift_level(edge). Tails are kept.
Completion lift_edges(const TailedGraph& tailed, const WeightedGraph& g, const NetTree& t,
                      double eps);

/// Net tree of the shortest-path metric, then tails, then lifting.
Completion complete_tree(const WeightedGraph& g, double eps);

struct CompletionOptions {
  Index samples_per_edge = 2;
  Index exact_max_n = kDefaultExactMaxN;
  /// Sampled conv dimension is skipped when the sample has more points.
  Index max_sample_points = 256;
};

struct CompletionReport {
  StretchReport stretch;  // original vertex pairs, contraction allowed
  bool input_is_tree = false;
  std::optional<bool> output_is_tree;  // only checked for tree inputs
  AuditResult audit;
  std::optional<DimensionEstimate> conv_dimension;
  Index conv_sample_points = 0;
  bool pass = false;
};

CompletionReport verify_completion(const WeightedGraph& g, const Completion& c, double eps,
                                   const CompletionOptions& options = {});

/// Graph file followed by `tail <orig-id> <j> <new-id>` and
/// `lift <u> <v> <level> <new-u> <new-v>` lines.
void write_completion(std::ostream& out, const Completion& c);

}  // namespace dcomp
