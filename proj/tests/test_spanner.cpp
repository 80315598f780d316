#include "dcomp/instances.hpp"
#include "dcomp/io.hpp"
#include "dcomp/spanner.hpp"
#include "dcomp/tolerance.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

using namespace dcomp;

namespace {

// Point 0 at the origin and point k+1 at 2^k on a line: the origin receives
// one in-edge per level, enough groups to trigger donation at eps = 1/4.
FiniteMetric geometric_progression(int count) {
  std::vector<double> pos{0.0};
  for (int k = 0; k < count; ++k) pos.push_back(std::ldexp(1.0, k));
  const auto n = static_cast<Index>(pos.size());
  Eigen::MatrixXd d(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d(i, j) = std::abs(pos[static_cast<std::size_t>(i)] - pos[static_cast<std::size_t>(j)]);
  return FiniteMetric(d);
}

}  // namespace

TEST(BaseEdges, TwoPointsEnterAtFirstLevel) {
  // Scaled distance 256 lies in (132, 264].
  const FiniteMetric m = testutil::two_points(5.0);
  const NetTree t = build_net_tree(m, 0.25);
  const BaseEdgeSets sets = build_base_edge_sets(m, t, 0.25);
  Index total = 0;
  for (const auto& level : sets) total += static_cast<Index>(level.size());
  EXPECT_EQ(total, 1);
  ASSERT_EQ(sets.at(1).size(), 1u);
  EXPECT_DOUBLE_EQ(sets[1][0].scaled_length, 256.0);
}

TEST(BaseEdges, UniformMetricAllInFirstLevel) {
  const FiniteMetric m = testutil::uniform_metric(6, 256.0);
  const BaseEdgeSets sets = build_base_edge_sets(m, build_net_tree(m, 0.25), 0.25);
  EXPECT_EQ(sets.at(1).size(), 15u);
  for (std::size_t i = 2; i < sets.size(); ++i) EXPECT_TRUE(sets[i].empty());
}

TEST(BaseEdges, SinglePointHasNone) {
  const FiniteMetric m(Eigen::MatrixXd::Zero(1, 1));
  for (const auto& level : build_base_edge_sets(m, build_net_tree(m, 0.25), 0.25))
    EXPECT_TRUE(level.empty());
}

TEST(BaseEdges, LevelBracketsAndDisjointness) {
  const FiniteMetric m = random_euclidean(60, 2, 4);
  const NetTree t = build_net_tree(m, 0.125);
  const double c = c_eps(0.125);
  std::set<std::pair<PointId, PointId>> seen;
  const BaseEdgeSets sets = build_base_edge_sets(m, t, 0.125);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (const BaseEdge& e : sets[i]) {
      EXPECT_LT(e.u, e.v);
      EXPECT_TRUE(t.find(static_cast<int>(i), e.u) && t.find(static_cast<int>(i), e.v));
      EXPECT_GT(e.scaled_length, c * std::ldexp(1.0, static_cast<int>(i) - 1) * (1 - 1e-9));
      EXPECT_LE(e.scaled_length, c * std::ldexp(1.0, static_cast<int>(i)) * (1 + 1e-9));
      EXPECT_TRUE(seen.insert({e.u, e.v}).second);
    }
  }
}

TEST(Directions, TowardLargerIstarThenLargerId) {
  const FiniteMetric m = random_euclidean(40, 2, 2);
  const NetTree t = build_net_tree(m, 0.25);
  const auto directed = assign_directions(build_base_edge_sets(m, t, 0.25), t);
  ASSERT_FALSE(directed.empty());
  for (const DirectedEdge& e : directed) {
    const int from = istar(t, e.from);
    const int to = istar(t, e.to);
    EXPECT_TRUE(from < to || (from == to && e.from < e.to));
  }
  EXPECT_TRUE(assign_directions(BaseEdgeSets(3), t).empty());
}

TEST(Donation, ThresholdValues) {
  EXPECT_EQ(donation_threshold(0.25), 14);
  EXPECT_EQ(donation_threshold(0.125), 21);
  EXPECT_EQ(donation_threshold(0.2), 17);
}

TEST(Donation, FewGroupsLeaveEdgesUntouched) {
  const FiniteMetric m = random_euclidean(30, 2, 3);
  const NetTree t = build_net_tree(m, 0.25);
  const auto directed = assign_directions(build_base_edge_sets(m, t, 0.25), t);
  const Spanner s = donate_edges(directed, m, 0.25);
  ASSERT_EQ(s.edges.size(), directed.size());
  std::set<std::pair<PointId, PointId>> in, out;
  for (const DirectedEdge& e : directed) in.insert({e.from, e.to});
  for (const SpannerEdge& e : s.edges) {
    out.insert({e.from, e.to});
    EXPECT_FALSE(e.donor);
    EXPECT_EQ(e.kind_to, EdgeKind::B);
  }
  EXPECT_EQ(in, out);
}

TEST(Donation, GeometricProgressionRewiresTopGroups) {
  const double eps = 0.25;
  const FiniteMetric m = geometric_progression(16);
  const Spanner s = build_spanner(m, eps);
  std::vector<SpannerEdge> donated;
  for (const SpannerEdge& e : s.edges)
    if (e.donor) donated.push_back(e);
  // Groups 15 and 16 at the origin go to the sources of groups 1 and 2.
  ASSERT_EQ(donated.size(), 2u);
  const double eps6 = std::pow(eps, 6);
  for (const SpannerEdge& e : donated) {
    EXPECT_EQ(*e.donor, 0);
    EXPECT_EQ(e.kind_to, EdgeKind::C);
    EXPECT_DOUBLE_EQ(e.length, m(e.from, e.to));
    const double original = m(e.from, *e.donor);
    EXPECT_LE(m(*e.donor, e.to), eps6 * original);
    EXPECT_LE(std::abs(e.length / original - 1.0), eps6);
  }
  EXPECT_EQ(donated[0].from, 15);
  EXPECT_EQ(donated[0].to, 1);
  EXPECT_EQ(donated[1].from, 16);
  EXPECT_EQ(donated[1].to, 2);
  EXPECT_FALSE(s.graph.find_edge(0, 15));
  EXPECT_TRUE(s.stretch.pass);
}

TEST(Spanner, TwoPoints) {
  const Spanner s = build_spanner(testutil::two_points(3.0), 0.25);
  EXPECT_EQ(s.graph.num_edges(), 1);
  EXPECT_DOUBLE_EQ(s.stretch.max_ratio, 1.0);
  EXPECT_TRUE(s.stretch.pass);
}

TEST(Spanner, EuclideanStretch) {
  const FiniteMetric m = random_euclidean(50, 2, 1);
  const Spanner s = build_spanner(m, 0.25);
  EXPECT_TRUE(s.stretch.pass);
  EXPECT_LE(s.stretch.max_ratio, 1.25 * (1 + 1e-9));
  const auto again = verify_stretch(m, shortest_path_metric(s.graph), 0.25, false);
  EXPECT_EQ(again.max_ratio, s.stretch.max_ratio);
}

TEST(Spanner, StarDegreePlateaus) {
  const double eps = 0.25;
  const Spanner s12 = build_spanner(shortest_path_metric(exponential_star(12)), eps);
  EXPECT_TRUE(s12.stretch.pass);
  EXPECT_EQ(s12.max_degree, 12);  // complete below the saturation size
  std::vector<Index> degrees;
  for (const Index n : {24, 32, 48}) {
    const Spanner s = build_spanner(shortest_path_metric(exponential_star(n)), eps);
    EXPECT_TRUE(s.stretch.pass);
    EXPECT_LE(s.stretch.max_ratio, 1.25 * (1 + 1e-9));
    degrees.push_back(s.max_degree);
  }
  EXPECT_EQ(degrees[0], 16);
  EXPECT_EQ(degrees[1], degrees[0]);
  EXPECT_EQ(degrees[2], degrees[0]);
}

TEST(Spanner, EdgeInvariants) {
  for (const FiniteMetric& m :
       {random_euclidean(60, 2, 8), shortest_path_metric(exponential_star(30))}) {
    const double eps = 0.25;
    const Spanner s = build_spanner(m, eps);
    const double c = c_eps(eps);
    std::set<std::pair<PointId, PointId>> pairs;
    for (const SpannerEdge& e : s.edges) {
      EXPECT_TRUE(pairs.insert(std::minmax(e.from, e.to)).second);
      const auto idx = s.graph.find_edge(e.from, e.to);
      ASSERT_TRUE(idx);
      EXPECT_DOUBLE_EQ(s.graph.edge(*idx).length, m(e.from, e.to));
      EXPECT_EQ(e.kind_from, EdgeKind::A);
      const PointId a = e.donor ? *e.donor : e.to;
      const double scaled = m(e.from, a) * s.net_tree.scale;
      EXPECT_TRUE(approx_le(scaled, c * std::ldexp(1.0, e.level)));
      EXPECT_TRUE(definitely_lt(c * std::ldexp(1.0, e.level - 1), scaled));
    }
    EXPECT_EQ(static_cast<Index>(pairs.size()), s.graph.num_edges());
    EXPECT_EQ(s.max_degree, s.graph.max_degree());
  }
}

TEST(Spanner, DeterministicSerialization) {
  const FiniteMetric m = shortest_path_metric(exponential_star(20));
  std::stringstream a, b;
  write_spanner(a, build_spanner(m, 0.25));
  write_spanner(b, build_spanner(m, 0.25));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str().find("kind=C donor=0"), std::string::npos);
  std::stringstream copy(a.str());
  const WeightedGraph g = read_graph(copy);
  EXPECT_EQ(g.num_edges(), build_spanner(m, 0.25).graph.num_edges());
}
