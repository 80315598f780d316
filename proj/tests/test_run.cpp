#include "dcomp/errors.hpp"
#include "dcomp/run.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace dcomp;

namespace {

RunConfig config(Pipeline p, const std::string& instance) {
  RunConfig c;
  c.pipeline = p;
  c.instance = InstanceSpec::parse(instance);
  return c;
}

}  // namespace

TEST(Run, SpannerOnEuclidean) {
  RunConfig c = config(Pipeline::Spanner, "family=euclidean-random n=50 seed=1");
  c.epsilon = 0.25;
  const RunReport r = run(c);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.body["stretch"]["pass"].get<bool>());
  EXPECT_LE(r.body["stretch"]["max"].get<double>(), 1.25 + 1e-9);
  EXPECT_TRUE(r.body["dim"].contains("input_upper"));
}

TEST(Run, AuditOnlyStar) {
  const RunReport r = run(config(Pipeline::AuditOnly, "family=exponential-star n=5"));
  EXPECT_EQ(r.body["audit"]["long_edge_max"].get<int>(), 5);
  EXPECT_EQ(r.body["audit"]["long_edge_witness_vertex"].get<int>(), 0);
  EXPECT_EQ(r.body["audit"]["long_edge_witness_edges"].size(), 5u);
  EXPECT_TRUE(r.body["audit"]["witness_packing"]["verified"].get<bool>());
  EXPECT_TRUE(r.pass);
}

TEST(Run, EpsilonOutOfRange) {
  RunConfig c = config(Pipeline::Spanner, "family=exponential-star n=5");
  c.epsilon = 0.5;
  EXPECT_THROW(run(c), ConfigError);
  c.epsilon = 0.0;
  EXPECT_THROW(run(c), ConfigError);
  c.epsilon = 0.25;
  c.samples_per_edge = -1;
  EXPECT_THROW(run(c), ConfigError);
}

TEST(Run, CertifyPipelines) {
  const RunReport lcp = run(config(Pipeline::CertifyLcp, "family=lcp-hypercube p=3"));
  EXPECT_TRUE(lcp.pass);
  EXPECT_DOUBLE_EQ(lcp.body["config"]["epsilon"].get<double>(), 1.0 / 16);
  EXPECT_TRUE(lcp.body["certificates"]["lcp"]["all_present"].get<bool>());

  RunConfig star = config(Pipeline::CertifyStar, "family=exponential-star n=10");
  star.epsilon = 1.0 / 64;
  const RunReport s = run(star);
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(s.body["certificates"]["star"]["size"].get<int>(), 5);

  EXPECT_THROW(run(config(Pipeline::CertifyLcp, "family=exponential-star n=4")), ConfigError);
}

TEST(Run, CompleteTreeReport) {
  RunConfig c = config(Pipeline::CompleteTree, "family=random-tree n=30 seed=2");
  c.epsilon = 0.125;
  const RunReport r = run(c);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.body["completion"]["output_is_tree"].get<bool>());
  EXPECT_TRUE(r.body["audit"].contains("long_edge_witness_radius"));
}

TEST(Run, DeterministicHashableSection) {
  for (const Pipeline p : {Pipeline::Spanner, Pipeline::CompleteTree, Pipeline::AuditOnly, Pipeline::Dim}) {
    RunConfig c = config(p, "family=random-tree n=25 seed=4");
    const RunReport a = run(c);
    const RunReport b = run(c);
    EXPECT_EQ(a.body.dump(), b.body.dump());
    EXPECT_EQ(a.hash(), b.hash());
  }
}

TEST(Run, ArtifactAndInputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "dcomp_run_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "tree.graph").string();
  RunConfig gen = config(Pipeline::Generate, "family=random-tree n=12 seed=9");
  gen.output = path;
  run(gen);

  RunConfig from_file = config(Pipeline::CompleteTree, "family=exponential-star n=3");
  from_file.input = path;
  RunConfig generated = config(Pipeline::CompleteTree, "family=random-tree n=12 seed=9");
  const RunReport a = run(from_file);
  const RunReport b = run(generated);
  EXPECT_EQ(a.body["stretch"].dump(), b.body["stretch"].dump());
  EXPECT_EQ(a.body["audit"].dump(), b.body["audit"].dump());
  std::filesystem::remove_all(dir);
}

TEST(Report, TextAndJsonMirror) {
  const RunReport r = run(config(Pipeline::AuditOnly, "family=exponential-star n=3"));
  const std::string text = r.to_text();
  EXPECT_NE(text.find("audit.long_edge_max = 3\n"), std::string::npos);
  EXPECT_NE(text.find("audit.long_edge_witness_edges:\n  - 0 1\n"), std::string::npos);
  EXPECT_NE(text.find("report_hash = " + r.hash()), std::string::npos);
  const RunReport back = RunReport::from_json(nlohmann::ordered_json::parse(r.to_json().dump()));
  EXPECT_EQ(back.hash(), r.hash());
  EXPECT_EQ(back.pass, r.pass);
}

TEST(PlotData, SortedDeterministicRows) {
  RunConfig a = config(Pipeline::AuditOnly, "family=exponential-star n=4");
  RunConfig b = config(Pipeline::Spanner, "family=euclidean-random n=10 seed=2");
  const std::vector<RunReport> reports{run(b), run(a)};
  const std::string table = emit_plot_data(reports);
  EXPECT_EQ(table, emit_plot_data({run(a), run(b)}));
  EXPECT_EQ(table.rfind("family\tn\tepsilon\tmetric\tvalue\n", 0), 0u);
  const auto star = table.find("exponential-star\t5\t0.25\taudit.long_edge_max\t4\n");
  const auto euclid = table.find("euclidean-random\t10\t0.25\tstretch.pass\t1\n");
  EXPECT_NE(star, std::string::npos);
  EXPECT_NE(euclid, std::string::npos);
  EXPECT_LT(euclid, star);
  // Null fields such as a missing stretch violation produce no row.
  EXPECT_EQ(table.find("stretch.violation"), std::string::npos);
}
