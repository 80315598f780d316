#include "dcomp/errors.hpp"
#include "dcomp/instances.hpp"
#include "dcomp/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dcomp;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  for (const double x : {1.0 / 3, 6430.0222113851405, 1e-300, 123456789.125})
    EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(MetricFile, RoundTrip) {
  const FiniteMetric m = random_euclidean(12, 2, 3);
  std::stringstream ss;
  write_metric(ss, m);
  EXPECT_EQ(read_metric(ss).matrix(), m.matrix());
}

TEST(MetricFile, CommentsAndErrors) {
  std::istringstream ok("# header comment\nmetric 2\nd 0 1 3.5 # trailing\n");
  EXPECT_DOUBLE_EQ(read_metric(ok)(0, 1), 3.5);
  std::istringstream missing("metric 3\nd 0 1 1\nd 0 2 1\n");
  EXPECT_THROW(read_metric(missing), ParseError);
  std::istringstream triangle("metric 3\nd 0 1 1\nd 0 2 5\nd 1 2 1\n");
  EXPECT_THROW(read_metric(triangle), InvalidMetric);
  std::istringstream garbage("metric 2\nd 0 1 abc\n");
  EXPECT_THROW(read_metric(garbage), ParseError);
  std::istringstream header("graph 2\n");
  EXPECT_THROW(read_metric(header), ParseError);
}

TEST(GraphFile, RoundTrip) {
  const WeightedGraph g = random_tree(30, 5);
  std::stringstream ss;
  write_graph(ss, g);
  const WeightedGraph back = read_graph(ss);
  ASSERT_EQ(back.num_edges(), g.num_edges());
  for (Index e = 0; e < g.num_edges(); ++e) {
    EXPECT_EQ(back.edge(e).u, g.edge(e).u);
    EXPECT_EQ(back.edge(e).v, g.edge(e).v);
    EXPECT_EQ(back.edge(e).length, g.edge(e).length);
  }
}

TEST(GraphFile, Errors) {
  std::istringstream self_loop("graph 2\ne 1 1 2\n");
  EXPECT_THROW(read_graph(self_loop), ParseError);
  std::istringstream unknown("graph 2\nx 0 1 2\n");
  EXPECT_THROW(read_graph(unknown), ParseError);
  std::istringstream sidecar("graph 2\ne 0 1 2\nmeta 0 1 level=1 kind=B donor=-\n");
  EXPECT_EQ(read_graph(sidecar).num_edges(), 1);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError);
}
