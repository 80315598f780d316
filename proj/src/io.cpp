#include "dcomp/io.hpp"

#include "dcomp/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace dcomp {

std::string format_double(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

namespace {

// Yields the whitespace-separated tokens of each meaningful line.
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

Index parse_index(const std::string& s) {
  Index value = 0;
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc() || result.ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + s + "'");
  return value;
}

double parse_double(const std::string& s) {
  double value = 0.0;
  const auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc() || result.ptr != s.data() + s.size())
    throw ParseError("expected a number, got '" + s + "'");
  return value;
}

Index parse_header(const std::vector<std::vector<std::string>>& lines, const char* keyword) {
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != keyword)
    throw ParseError(std::string("missing '") + keyword + " <n>' header");
  const Index n = parse_index(lines[0][1]);
  if (n < 0) throw ParseError("negative size in header");
  return n;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

}  // namespace

void write_metric(std::ostream& out, const FiniteMetric& m) {
  out << "metric " << m.size() << '\n';
  for (Index i = 0; i < m.size(); ++i)
    for (Index j = i + 1; j < m.size(); ++j)
      out << "d " << i << ' ' << j << ' ' << format_double(m(i, j)) << '\n';
}

FiniteMetric read_metric(std::istream& in) {
  const auto lines = tokenize(in);
  const Index n = parse_header(lines, "metric");
  Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, -1.0);
  dist.diagonal().setZero();
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& tok = lines[k];
    if (tok.size() != 4 || tok[0] != "d") throw ParseError("malformed metric line " + tok[0]);
    const Index i = parse_index(tok[1]);
    const Index j = parse_index(tok[2]);
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw ParseError("metric line needs 0 <= i < j < n");
    if (dist(i, j) >= 0.0) throw ParseError("duplicate metric entry");
    dist(i, j) = dist(j, i) = parse_double(tok[3]);
  }
  if ((dist.array() < 0.0).any()) throw ParseError("metric file is missing pairs");
  FiniteMetric m(std::move(dist));
  if (!m.satisfies_triangle_inequality()) throw InvalidMetric("triangle inequality violated");
  return m;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << "graph " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges())
    out << "e " << e.u << ' ' << e.v << ' ' << format_double(e.length) << '\n';
}

WeightedGraph read_graph(std::istream& in) {
  const auto lines = tokenize(in);
  const Index n = parse_header(lines, "graph");
  WeightedGraph g(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& tok = lines[k];
    if (tok[0] == "meta" || tok[0] == "tail" || tok[0] == "lift") continue;
    if (tok.size() != 4 || tok[0] != "e") throw ParseError("malformed graph line " + tok[0]);
    try {
      g.add_edge(parse_index(tok[1]), parse_index(tok[2]), parse_double(tok[3]));
    } catch (const InvalidGraph& err) {
      throw ParseError(err.what());
    }
  }
  return g;
}

FiniteMetric read_metric_file(const std::string& path) {
  auto in = open(path);
  return read_metric(in);
}

WeightedGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

}  // namespace dcomp
