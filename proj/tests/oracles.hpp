#pragma once

// Brute-force reference implementations, written independently of the library
// code paths they check.

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

struct Edge {
  int u, v;
  double len;
};

inline Eigen::MatrixXd floyd_warshall(int n, const std::vector<Edge>& edges) {
  const double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, inf);
  for (int i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const Edge& e : edges) d(e.u, e.v) = d(e.v, e.u) = std::min(d(e.u, e.v), e.len);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

inline bool le(double a, double b) { return a <= b * (1.0 + 1e-12) + 1e-12; }

// Minimum number of closed r-balls centered anywhere covering B(x, 2r), by
// trying every subset of centers in order of size.
inline int min_cover_exhaustive(const Eigen::MatrixXd& d, int x, double r) {
  const int n = static_cast<int>(d.rows());
  std::uint32_t target = 0;
  for (int p = 0; p < n; ++p)
    if (le(d(x, p), 2 * r)) target |= 1u << p;
  std::vector<std::uint32_t> ball(n, 0);
  for (int y = 0; y < n; ++y)
    for (int p = 0; p < n; ++p)
      if (le(d(y, p), r)) ball[y] |= 1u << p;
  int best = n + 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (int y = 0; y < n; ++y)
      if (mask >> y & 1) covered |= ball[y];
    if ((covered & target) == target) best = size;
  }
  return best;
}

// Doubling constant over every center and every radius in {d/2, d}, d ranging
// over all pairwise distances.
inline int doubling_constant_exhaustive(const Eigen::MatrixXd& d) {
  const int n = static_cast<int>(d.rows());
  std::set<double> radii;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      radii.insert(d(i, j));
      radii.insert(d(i, j) / 2);
    }
  int lambda = 1;
  for (int x = 0; x < n; ++x)
    for (const double r : radii) lambda = std::max(lambda, min_cover_exhaustive(d, x, r));
  return lambda;
}

// Maximum of |L_u(r)| over a uniform grid of radii with the given step.
inline int audit_grid(int n, const std::vector<Edge>& edges, double step) {
  const Eigen::MatrixXd d = floyd_warshall(n, edges);
  double top = 0.0;
  for (const Edge& e : edges) top = std::max(top, e.len);
  int best = 0;
  for (int u = 0; u < n; ++u) {
    for (double r = 0.0; r <= top + 1.0; r += step) {
      int count = 0;
      for (const Edge& e : edges)
        if (std::min(d(u, e.u), d(u, e.v)) <= r && e.len > r) ++count;
      best = std::max(best, count);
    }
  }
  return best;
}

// Connected graph on n vertices with integer lengths in [1, max_len]: a random
// spanning tree plus extra random edges, up to max_edges edges in total.
inline std::vector<Edge> random_connected(int n, int max_edges, int max_len, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  auto len = [&] { return static_cast<double>(1 + static_cast<int>(rng() % max_len)); };
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % v);
    edges.push_back({u, v, len()});
    seen.insert({u, v});
  }
  for (int tries = 0; tries < 50 && static_cast<int>(edges.size()) < max_edges; ++tries) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    edges.push_back({u, v, len()});
  }
  return edges;
}

}  // namespace oracle
