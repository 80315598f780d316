#include "dcomp/run.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/io.hpp"
#include "dcomp/spanner.hpp"
#include "dcomp/tolerance.hpp"
#include "dcomp/tree_completion.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

namespace dcomp {

using json = nlohmann::ordered_json;

const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Generate:
      return "gen";
    case Pipeline::Spanner:
      return "spanner";
    case Pipeline::CompleteTree:
      return "complete-tree";
    case Pipeline::AuditOnly:
      return "audit-only";
    case Pipeline::Dim:
      return "dim";
    case Pipeline::CertifyStar:
      return "certify-star";
    case Pipeline::CertifyLcp:
      return "certify-lcp";
  }
  return "?";
}

Pipeline parse_pipeline(const std::string& name) {
  for (const Pipeline p : {Pipeline::Generate, Pipeline::Spanner, Pipeline::CompleteTree,
                           Pipeline::AuditOnly, Pipeline::Dim, Pipeline::CertifyStar,
                           Pipeline::CertifyLcp})
    if (name == to_string(p)) return p;
  if (name == "audit") return Pipeline::AuditOnly;
  throw ConfigError("unknown pipeline '" + name + "'");
}

double RunConfig::effective_epsilon() const {
  if (epsilon) return *epsilon;
  if (pipeline == Pipeline::CertifyLcp) return std::ldexp(1.0, -(instance.p + 1));
  return 0.25;
}

void RunConfig::validate() const {
  const double eps = effective_epsilon();
  if (!(eps > 0.0 && eps <= 0.25))
    throw ConfigError("epsilon must lie in (0, 1/4], got " + format_double(eps));
  if (samples_per_edge < 0) throw ConfigError("samples_per_edge must be nonnegative");
  if (exact_max_n < 0) throw ConfigError("exact_max_n must be nonnegative");
  if (pipeline == Pipeline::CertifyLcp && (input || instance.family != Family::LcpHypercube))
    throw ConfigError("certify-lcp needs an lcp-hypercube instance");
  if (pipeline == Pipeline::CertifyStar && !input && instance.family != Family::ExponentialStar)
    throw ConfigError("certify-star needs an exponential-star instance");
}

// ---------------------------------------------------------------------------
// Report plumbing

std::string RunReport::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char ch : body.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

void render(std::ostringstream& out, const std::string& key, const json& v) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) render(out, key.empty() ? k : key + "." + k, child);
  } else if (v.is_array()) {
    out << key << ":\n";
    for (const auto& item : v) {
      out << "  -";
      if (item.is_array())
        for (const auto& x : item) out << ' ' << scalar_text(x);
      else
        out << ' ' << scalar_text(item);
      out << '\n';
    }
  } else {
    out << key << " = " << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string RunReport::to_text() const {
  std::ostringstream out;
  render(out, "", body);
  out << "report_hash = " << hash() << '\n';
  render(out, "timings", timings);
  return out.str();
}

json RunReport::to_json() const {
  json j;
  j["report"] = body;
  j["report_hash"] = hash();
  j["timings"] = timings;
  return j;
}

RunReport RunReport::from_json(const json& j) {
  RunReport r;
  r.body = j.at("report");
  if (j.contains("timings")) r.timings = j.at("timings");
  r.pass = r.body.at("pass").get<bool>();
  return r;
}

// ---------------------------------------------------------------------------
// Serializers for library results

namespace {

json pair_json(std::pair<Index, Index> p) { return json::array({p.first, p.second}); }

json stretch_json(const StretchReport& s) {
  json j;
  j["min"] = s.min_ratio;
  j["max"] = s.max_ratio;
  j["min_pair"] = pair_json(s.min_pair);
  j["max_pair"] = pair_json(s.max_pair);
  j["pass"] = s.pass;
  j["violation"] = s.violation ? pair_json(*s.violation) : json();
  return j;
}

json edge_list(const WeightedGraph& g, const std::vector<Index>& edges) {
  json list = json::array();
  for (const Index e : edges) list.push_back(json::array({g.edge(e).u, g.edge(e).v}));
  return list;
}

json audit_json(const ConvexClosure& cc, const AuditResult& a) {
  json j;
  j["long_edge_max"] = a.max_count;
  j["long_edge_witness_vertex"] = a.witness_vertex;
  j["long_edge_witness_radius"] = a.witness_radius;
  j["long_edge_witness_edges"] = edge_list(cc.graph(), a.witness_edges);
  return j;
}

json packing_json(const PackingCertificate& p) {
  json j;
  j["size"] = p.points.size();
  j["radius"] = p.radius;
  j["min_separation"] = p.min_separation;
  j["min_pairwise"] = p.min_pairwise;
  j["max_pairwise"] = p.max_pairwise;
  j["max_center_distance"] = p.max_center_distance;
  j["verified"] = p.verified;
  j["dim_lower"] = p.dim_lower;
  return j;
}

void put_dim(json& dim, const std::string& prefix, const DimensionEstimate& d) {
  dim[prefix + "_upper"] = d.dim_upper;
  dim[prefix + "_lambda"] = d.lambda_upper;
  dim[prefix + "_lower"] = d.dim_lower;
  dim[prefix + "_mode"] = to_string(d.mode);
}

// The audit witness packing; vacuous when there are no long edges.
PackingCertificate witness_packing(const ConvexClosure& cc, const AuditResult& a) {
  if (a.max_count == 0) {
    PackingCertificate empty;
    empty.verified = true;
    return empty;
  }
  return long_edge_packing_witness(cc, a.witness_vertex, a.witness_radius);
}

WeightedGraph as_graph(const Instance& inst) {
  if (const auto* g = std::get_if<WeightedGraph>(&inst)) return *g;
  return complete_graph(std::get<FiniteMetric>(inst));
}

void write_artifact(const std::optional<std::string>& path, const auto& writer) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw ConfigError("cannot open output file " + *path);
  writer(out);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file " + path);
  std::string header;
  while (in >> header && header.front() == '#') std::getline(in, header);
  in.clear();
  in.seekg(0);
  if (header == "metric") return read_metric(in);
  if (header == "graph") return read_graph(in);
  throw ParseError("input file " + path + " is neither a metric nor a graph file");
}

// ---------------------------------------------------------------------------

RunReport run(const RunConfig& config) {
  config.validate();
  const double eps = config.effective_epsilon();
  const auto t0 = Clock::now();

  const Instance inst = config.input ? read_instance_file(*config.input) : generate(config.instance);
  const FiniteMetric m = instance_metric(inst);
  const bool is_graph = std::holds_alternative<WeightedGraph>(inst);
  const bool small = m.size() <= config.max_dim_points;

  RunReport report;
  json& body = report.body;
  body["config"] = {
      {"pipeline", to_string(config.pipeline)},
      {"family", config.input ? std::string("file") : std::string(to_string(config.instance.family))},
      {"instance", config.input ? *config.input : config.instance.to_string()},
      {"seed", config.instance.seed},
      {"epsilon", eps},
      {"samples_per_edge", config.samples_per_edge},
      {"exact_max_n", config.exact_max_n},
  };
  json& info = body["instance"];
  info["kind"] = is_graph ? "graph" : "metric";
  info["n"] = m.size();
  if (is_graph) info["edges"] = std::get<WeightedGraph>(inst).num_edges();
  info["min_distance"] = m.size() > 1 ? json(m.min_distance()) : json();
  info["diameter"] = m.diameter();

  bool pass = true;
  switch (config.pipeline) {
    case Pipeline::Generate: {
      write_artifact(config.output, [&](std::ostream& out) {
        if (is_graph)
          write_graph(out, std::get<WeightedGraph>(inst));
        else
          write_metric(out, m);
      });
      break;
    }

    case Pipeline::Spanner: {
      const Spanner s = build_spanner(m, eps);
      report.timings["construct_seconds"] = seconds_since(t0);
      const auto donated = std::count_if(s.edges.begin(), s.edges.end(),
                                         [](const SpannerEdge& e) { return e.donor.has_value(); });
      body["spanner"] = {{"tau", s.net_tree.tau},
                         {"scale", s.net_tree.scale},
                         {"top_level", s.net_tree.top_level()},
                         {"edges", s.graph.num_edges()},
                         {"max_degree", s.max_degree},
                         {"donation_threshold", donation_threshold(eps)},
                         {"donated_edges", donated}};
      body["stretch"] = stretch_json(s.stretch);
      if (small) put_dim(body["dim"], "input", estimate_dimension(m, config.exact_max_n));
      write_artifact(config.output, [&](std::ostream& out) { write_spanner(out, s); });
      pass = s.stretch.pass;
      break;
    }

    case Pipeline::CompleteTree:
    case Pipeline::CertifyStar: {
      const WeightedGraph g = as_graph(inst);
      const Completion c = complete_tree(g, eps);
      report.timings["construct_seconds"] = seconds_since(t0);
      body["completion"] = {{"tau", c.net_tree.tau},
                            {"scale", c.scale},
                            {"top_level", c.net_tree.top_level()},
                            {"output_vertices", c.output.num_vertices()},
                            {"output_edges", c.output.num_edges()},
                            {"lifted_edges", c.lifted.size()}};
      const bool with_star = config.pipeline == Pipeline::CertifyStar ||
                             (!config.input && config.instance.family == Family::ExponentialStar &&
                              c.num_original - 1 >= floor_log2(1.0 / (2.0 * eps)));
      if (config.pipeline == Pipeline::CompleteTree) {
        CompletionOptions options;
        options.samples_per_edge = config.samples_per_edge;
        options.exact_max_n = config.exact_max_n;
        options.max_sample_points = config.max_dim_points;
        const CompletionReport r = verify_completion(g, c, eps, options);
        body["completion"]["input_is_tree"] = r.input_is_tree;
        body["completion"]["output_is_tree"] = r.output_is_tree ? json(*r.output_is_tree) : json();
        body["stretch"] = stretch_json(r.stretch);
        const ConvexClosure cc(c.output);
        body["audit"] = audit_json(cc, r.audit);
        json& dim = body["dim"];
        if (small) put_dim(dim, "input", estimate_dimension(m, config.exact_max_n));
        dim["conv_sample_points"] = r.conv_sample_points;
        if (r.conv_dimension) put_dim(dim, "conv_sampled", *r.conv_dimension);
        pass = r.pass;
      }
      if (with_star) {
        const StarCertificate cert = star_lb_certificate(c, eps);
        json& j = body["certificates"]["star"];
        j = packing_json(cert.packing);
        j["expected_size"] = cert.expected_size;
        j["distances_in_window"] = cert.distances_in_window;
        j["pass"] = cert.pass;
        pass = pass && cert.pass;
      }
      write_artifact(config.output, [&](std::ostream& out) { write_completion(out, c); });
      break;
    }

    case Pipeline::AuditOnly: {
      const ConvexClosure cc(as_graph(inst));
      const AuditResult a = long_edge_audit(cc);
      report.timings["construct_seconds"] = seconds_since(t0);
      body["audit"] = audit_json(cc, a);
      const PackingCertificate w = witness_packing(cc, a);
      body["audit"]["witness_packing"] = packing_json(w);
      if (small) put_dim(body["dim"], "input", doubling_estimate(m, config.exact_max_n));
      pass = w.verified;
      break;
    }

    case Pipeline::Dim: {
      const DimensionEstimate d = estimate_dimension(m, config.exact_max_n);
      json& dim = body["dim"];
      put_dim(dim, "input", d);
      dim["input_upper_center"] = d.upper_center;
      dim["input_upper_radius"] = d.upper_radius;
      dim["input_lower_witness_size"] = d.lower_witness.size();
      pass = d.lower_verified;
      if (is_graph) {
        const ConvexClosure cc(std::get<WeightedGraph>(inst));
        const Index points = cc.graph().num_vertices() + config.samples_per_edge * cc.graph().num_edges();
        dim["conv_sample_points"] = points;
        if (points <= config.max_dim_points) {
          const DimensionEstimate conv =
              sampled_conv_dimension(cc, config.samples_per_edge, config.exact_max_n);
          put_dim(dim, "conv_sampled", conv);
          pass = pass && conv.lower_verified;
        }
      }
      report.timings["construct_seconds"] = seconds_since(t0);
      break;
    }

    case Pipeline::CertifyLcp: {
      const int p = config.instance.p;
      const Spanner s = build_spanner(m, eps);
      report.timings["construct_seconds"] = seconds_since(t0);
      body["spanner"] = {{"edges", s.graph.num_edges()}, {"max_degree", s.max_degree}};
      body["stretch"] = stretch_json(s.stretch);
      const CrossingReport cr = lcp_crossing_check(s.graph, p);
      json& j = body["certificates"]["lcp"];
      j["crossing_present"] = cr.present;
      j["crossing_total"] = cr.total;
      j["crossing_fraction"] = cr.fraction;
      j["missing"] = cr.missing ? pair_json(*cr.missing) : json();
      j["all_present"] = cr.all_present;
      const PackingCertificate pk = lcp_midpoint_packing(s.graph, p);
      j["midpoints"] = packing_json(pk);
      pass = s.stretch.pass && cr.all_present && pk.verified;
      write_artifact(config.output, [&](std::ostream& out) { write_spanner(out, s); });
      break;
    }
  }

  body["pass"] = pass;
  report.pass = pass;
  report.timings["total_seconds"] = seconds_since(t0);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void collect_leaves(const json& v, const std::string& key,
                    std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items())
      collect_leaves(child, key.empty() ? k : key + "." + k, out);
  } else if (v.is_boolean()) {
    out.emplace_back(key, v.get<bool>() ? "1" : "0");
  } else if (v.is_number()) {
    out.emplace_back(key, scalar_text(v));
  }
}

}  // namespace

std::string emit_plot_data(const std::vector<RunReport>& reports) {
  using Row = std::tuple<std::string, Index, double, std::string, std::string>;
  std::vector<Row> rows;
  for (const RunReport& r : reports) {
    const json& cfg = r.body.at("config");
    const auto family = cfg.at("family").get<std::string>();
    const auto n = r.body.at("instance").at("n").get<Index>();
    const auto eps = cfg.at("epsilon").get<double>();
    std::vector<std::pair<std::string, std::string>> leaves;
    for (const auto& [k, child] : r.body.items())
      if (k != "config" && k != "instance") collect_leaves(child, k, leaves);
    for (auto& [name, value] : leaves) rows.emplace_back(family, n, eps, name, value);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::ostringstream out;
  out << "family\tn\tepsilon\tmetric\tvalue\n";
  for (const auto& [family, n, eps, name, value] : rows)
    out << family << '\t' << n << '\t' << format_double(eps) << '\t' << name << '\t' << value << '\n';
  return out.str();
}

}  // namespace dcomp
