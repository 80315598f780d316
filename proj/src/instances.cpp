#include "dcomp/instances.hpp"

#include "dcomp/errors.hpp"
#include "dcomp/io.hpp"
#include "dcomp/tolerance.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace dcomp {

const char* to_string(Family f) {
  switch (f) {
    case Family::ExponentialStar:
      return "exponential-star";
    case Family::LcpHypercube:
      return "lcp-hypercube";
    case Family::EuclideanRandom:
      return "euclidean-random";
    case Family::RandomTree:
      return "random-tree";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (const Family f : {Family::ExponentialStar, Family::LcpHypercube, Family::EuclideanRandom,
                         Family::RandomTree})
    if (name == to_string(f)) return f;
  if (name == "euclidean") return Family::EuclideanRandom;
  if (name == "star") return Family::ExponentialStar;
  if (name == "lcp") return Family::LcpHypercube;
  if (name == "tree") return Family::RandomTree;
  throw ConfigError("unknown instance family '" + name + "'");
}

InstanceSpec InstanceSpec::parse(const std::string& block) {
  InstanceSpec spec;
  bool have_family = false;
  std::istringstream ss(block);
  for (std::string tok; ss >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    try {
      if (key == "family") {
        spec.family = parse_family(value);
        have_family = true;
      } else if (key == "n") {
        spec.n = std::stoll(value);
      } else if (key == "p") {
        spec.p = std::stoi(value);
      } else if (key == "dim") {
        spec.dim = std::stoi(value);
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else {
        throw ConfigError("unknown instance key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw ConfigError("bad value for '" + key + "': '" + value + "'");
    }
  }
  if (!have_family) throw ConfigError("instance block needs family=<...>");
  if (spec.n < 1) throw ConfigError("instance needs n >= 1");
  if (spec.p < 1 || spec.p > 12) throw ConfigError("lcp instances need 1 <= p <= 12");
  if (spec.dim < 1) throw ConfigError("instance needs dim >= 1");
  return spec;
}

std::string InstanceSpec::to_string() const {
  std::ostringstream out;
  out << "family=" << dcomp::to_string(family);
  if (family == Family::LcpHypercube)
    out << " p=" << p;
  else
    out << " n=" << n;
  if (family == Family::EuclideanRandom) out << " dim=" << dim;
  if (family == Family::EuclideanRandom || family == Family::RandomTree) out << " seed=" << seed;
  return out.str();
}

Instance generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::ExponentialStar:
      return exponential_star(spec.n);
    case Family::LcpHypercube:
      return lcp_metric(spec.p);
    case Family::EuclideanRandom:
      return random_euclidean(spec.n, spec.dim, spec.seed);
    case Family::RandomTree:
      return random_tree(spec.n, spec.seed);
  }
  throw ConfigError("unknown family");
}

FiniteMetric instance_metric(const Instance& inst) {
  if (const auto* g = std::get_if<WeightedGraph>(&inst)) return shortest_path_metric(*g);
  return std::get<FiniteMetric>(inst);
}

WeightedGraph exponential_star(Index n) {
  if (n < 1) throw InvalidArgument("exponential star needs n >= 1");
  WeightedGraph g(n + 1);
  for (Index i = 1; i <= n; ++i) g.add_edge(0, i, std::ldexp(1.0, static_cast<int>(i)));
  return g;
}

namespace {

int common_prefix(PointId a, PointId b, int p) {
  int len = 0;
  for (int bit = p - 1; bit >= 0 && ((a >> bit) & 1) == ((b >> bit) & 1); --bit) ++len;
  return len;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

FiniteMetric lcp_metric(int p) {
  if (p < 1) throw InvalidArgument("lcp metric needs p >= 1");
  const Index n = Index{1} << p;
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b) dist(a, b) = std::ldexp(1.0, p - common_prefix(a, b, p));
  return FiniteMetric(std::move(dist));
}

std::string lcp_label(PointId id, int p) {
  std::string s;
  for (int bit = p - 1; bit >= 0; --bit) s.push_back(((id >> bit) & 1) ? '1' : '0');
  return s;
}

Eigen::MatrixXd random_points(Index n, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd pts(n, dim);
  for (Index i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) pts(i, k) = unit(rng);
  return pts;
}

FiniteMetric random_euclidean(Index n, int dim, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("need n >= 1");
  const Eigen::MatrixXd pts = random_points(n, dim, seed);
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) dist(i, j) = dist(j, i) = (pts.row(i) - pts.row(j)).norm();
  return FiniteMetric(std::move(dist));
}

WeightedGraph random_tree(Index n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("need n >= 1");
  std::mt19937_64 rng(seed);
  WeightedGraph g(n);
  for (Index i = 1; i < n; ++i) {
    const auto parent = static_cast<Index>(rng() % static_cast<std::uint64_t>(i));
    g.add_edge(parent, i, std::exp2(8.0 * unit(rng)));
  }
  return g;
}

StarCertificate star_lb_certificate(const Completion& c, double eps) {
  require_epsilon(eps);
  StarCertificate cert;
  cert.expected_size = floor_log2(1.0 / (2.0 * eps));
  const Index leaves = c.num_original - 1;
  if (leaves < cert.expected_size)
    throw TooFewLeaves("star has " + std::to_string(leaves) + " leaves, certificate needs " +
                       std::to_string(cert.expected_size));
  const ConvexClosure cc(c.output);
  const ConvPoint center = ConvPoint::at_vertex(0);
  std::vector<ConvPoint> points;
  for (Index i = 1; i <= cert.expected_size; ++i)
    points.push_back(cc.geodesic_point(center, ConvPoint::at_vertex(i), 1.0));
  cert.packing = certify_packing(cc, std::move(points), center, 2.0, 1.0);
  const auto& pk = cert.packing;
  cert.distances_in_window =
      pk.points.size() < 2 || (pk.min_pairwise >= 1.0 - 1e-9 && pk.max_pairwise <= 2.0 + 1e-9);
  cert.pass = pk.verified && cert.distances_in_window &&
              static_cast<Index>(pk.points.size()) == cert.expected_size;
  return cert;
}

CrossingReport lcp_crossing_check(const WeightedGraph& h, int p) {
  const Index n = Index{1} << p;
  if (h.num_vertices() != n)
    throw VertexSetMismatch("graph has " + std::to_string(h.num_vertices()) +
                            " vertices, lcp points number " + std::to_string(n));
  const Index half = n / 2;
  CrossingReport report;
  report.total = half * half;
  for (VertexId a = 0; a < half; ++a) {
    for (VertexId b = half; b < n; ++b) {
      if (h.find_edge(a, b))
        ++report.present;
      else if (!report.missing)
        report.missing = std::make_pair(a, b);
    }
  }
  report.fraction = static_cast<double>(report.present) / static_cast<double>(report.total);
  report.all_present = report.present == report.total;
  return report;
}

PackingCertificate lcp_midpoint_packing(const WeightedGraph& h, int p) {
  const Index n = Index{1} << p;
  if (h.num_vertices() != n) throw VertexSetMismatch("graph is not on the lcp point set");
  const ConvexClosure cc(h);
  const Index half = n / 2;
  std::vector<ConvPoint> points;
  for (VertexId a = 0; a < half; ++a)
    for (VertexId b = half; b < n; ++b)
      if (const auto e = h.find_edge(a, b)) points.push_back(ConvPoint::on_edge(*e, h.edge(*e).length / 2.0));
  if (points.empty()) throw VertexSetMismatch("graph has no crossing edges");
  const double unit_scale = std::ldexp(1.0, p - 1);
  const ConvPoint center = points.front();
  return certify_packing(cc, std::move(points), center, 3.0 * unit_scale, 2.0 * unit_scale);
}

}  // namespace dcomp
