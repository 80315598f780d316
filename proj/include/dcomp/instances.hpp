#pragma once

#include "dcomp/convex_closure.hpp"
#include "dcomp/metric.hpp"
#include "dcomp/tree_completion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace dcomp {

enum class Family { ExponentialStar, LcpHypercube, EuclideanRandom, RandomTree };

const char* to_string(Family f);
Family parse_family(const std::string& name);

/// Generator parameters. Units: star and tree lengths are powers of two
/// (or 2^u for real u), lcp distances are powers of two, Euclidean points
/// live in the unit cube.
struct InstanceSpec {
  Family family = Family::ExponentialStar;
  Index n = 8;
  int p = 3;
  int dim = 2;
  std::uint64_t seed = 1;

  /// `family=<name> n=<count> p=<bits> dim=<d> seed=<s>`; keys optional
  /// except family. Throws ConfigError.
  static InstanceSpec parse(const std::string& block);
  std::string to_string() const;
  bool is_graph() const {
    return family == Family::ExponentialStar || family == Family::RandomTree;
  }
};

using Instance = std::variant<WeightedGraph, FiniteMetric>;

Instance generate(const InstanceSpec& spec);
/// The instance's metric (shortest-path metric for graph families).
FiniteMetric instance_metric(const Instance& inst);

/// Star with center 0 and leaves 1..n, edge {0,i} of length 2^i.
WeightedGraph exponential_star(Index n);

/// Points are the binary strings of length p, id = the string read as a
/// binary number (so ids follow lexicographic order); d = 2^(p - lcp).
FiniteMetric lcp_metric(int p);
std::string lcp_label(PointId id, int p);

/// Uniform points in [0,1]^dim, one point per row.
Eigen::MatrixXd random_points(Index n, int dim, std::uint64_t seed);
FiniteMetric random_euclidean(Index n, int dim, std::uint64_t seed);

/// Random recursive tree: vertex i attaches to a uniform earlier vertex with
/// length 2^u, u uniform in [0, 8).
WeightedGraph random_tree(Index n, std::uint64_t seed);

/// Points at conv-distance 1 from v0 along the geodesics to v_1..v_k,
/// k = floor(log2(1/(2 eps))), certified inside B(v0, 2) with pairwise
/// distances >= 1. Throws TooFewLeaves.
struct StarCertificate {
  PackingCertificate packing;
  Index expected_size = 0;
  bool distances_in_window = false;  // every pairwise distance in [1, 2]
  bool pass = false;
};
StarCertificate star_lb_certificate(const Completion& c, double eps);

struct CrossingReport {
  Index present = 0;
  Index total = 0;
  double fraction = 0.0;
  std::optional<std::pair<VertexId, VertexId>> missing;
  bool all_present = false;
};

/// Checks that every pair (0x, 1y) is a direct edge of h. Throws
/// VertexSetMismatch when h does not have exactly 2^p vertices.
CrossingReport lcp_crossing_check(const WeightedGraph& h, int p);

/// Midpoints of the crossing edges present in h, certified as a packing with
/// separation 2^p inside the ball of radius 3 * 2^(p-1) around the first
/// midpoint. The realized pairwise window is reported.
PackingCertificate lcp_midpoint_packing(const WeightedGraph& h, int p);

}  // namespace dcomp
