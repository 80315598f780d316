// Command-line driver: generate, construct, verify and report.

#include "dcomp/errors.hpp"
#include "dcomp/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Options {
  std::string instance = "family=exponential-star n=8";
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::optional<std::string> report;
  dcomp::Index samples_per_edge = 2;
  dcomp::Index exact_max_n = dcomp::kDefaultExactMaxN;
  dcomp::Index max_dim_points = 256;
  std::vector<std::string> report_inputs;
};

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--instance", o.instance, "Instance block, e.g. \"family=euclidean-random n=50 seed=1\"");
  cmd->add_option("--seed", o.seed, "Overrides the instance seed");
  cmd->add_option("--epsilon", o.epsilon, "Accuracy parameter in (0, 1/4]");
  cmd->add_option("--input", o.input, "Metric or graph file used instead of the generator");
  cmd->add_option("--output", o.output, "Artifact file (instance, spanner or completion)");
  cmd->add_option("--report", o.report, "Write <prefix>.txt and <prefix>.json instead of printing");
  cmd->add_option("--samples-per-edge", o.samples_per_edge, "Interior samples per edge")->capture_default_str();
  cmd->add_option("--exact-dim-max-n", o.exact_max_n, "Exact cover search up to this many points")
      ->capture_default_str();
  cmd->add_option("--max-dim-points", o.max_dim_points, "Skip dimension estimates above this size")
      ->capture_default_str();
}

int run_pipeline(dcomp::Pipeline pipeline, const Options& o) {
  dcomp::RunConfig config;
  config.instance = dcomp::InstanceSpec::parse(o.instance);
  if (o.seed) config.instance.seed = *o.seed;
  config.input = o.input;
  config.epsilon = o.epsilon;
  config.pipeline = pipeline;
  config.samples_per_edge = o.samples_per_edge;
  config.exact_max_n = o.exact_max_n;
  config.max_dim_points = o.max_dim_points;
  config.output = o.output;

  const dcomp::RunReport report = dcomp::run(config);
  if (o.report) {
    std::ofstream(*o.report + ".txt") << report.to_text();
    std::ofstream(*o.report + ".json") << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.pass ? 0 : 1;
}

int emit_report(const Options& o) {
  std::vector<dcomp::RunReport> reports;
  for (const auto& path : o.report_inputs) {
    std::ifstream in(path);
    if (!in) throw dcomp::ConfigError("cannot open report " + path);
    try {
      reports.push_back(dcomp::RunReport::from_json(nlohmann::ordered_json::parse(in)));
    } catch (const nlohmann::json::exception& e) {
      throw dcomp::ParseError(path + ": " + e.what());
    }
  }
  const std::string table = dcomp::emit_plot_data(reports);
  if (o.output)
    std::ofstream(*o.output) << table;
  else
    std::cout << table;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubling-metric spanners, tree completions and their certificates"};
  app.require_subcommand(1);
  Options o;

  const std::pair<const char*, dcomp::Pipeline> commands[] = {
      {"gen", dcomp::Pipeline::Generate},
      {"spanner", dcomp::Pipeline::Spanner},
      {"complete-tree", dcomp::Pipeline::CompleteTree},
      {"audit", dcomp::Pipeline::AuditOnly},
      {"dim", dcomp::Pipeline::Dim},
      {"certify-star", dcomp::Pipeline::CertifyStar},
      {"certify-lcp", dcomp::Pipeline::CertifyLcp},
  };
  std::optional<dcomp::Pipeline> chosen;
  for (const auto& [name, pipeline] : commands) {
    CLI::App* cmd = app.add_subcommand(name, std::string("Run the ") + name + " pipeline");
    add_run_flags(cmd, o);
    cmd->callback([&chosen, p = pipeline] { chosen = p; });
  }
  CLI::App* report = app.add_subcommand("report", "Merge JSON reports into a plot table");
  report->add_option("--input", o.report_inputs, "JSON report files")->required();
  report->add_option("--output", o.output, "Table file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (chosen) return run_pipeline(*chosen, o);
    return emit_report(o);
  } catch (const dcomp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const dcomp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
