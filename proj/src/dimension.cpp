#include "dcomp/dimension.hpp"

#include "dcomp/tolerance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace dcomp {

const char* to_string(CoverMode mode) {
  return mode == CoverMode::ExactCover ? "exact-cover" : "greedy-cover";
}

namespace {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(Index bits) : words_(static_cast<std::size_t>((bits + 63) / 64), 0) {}

  void set(Index i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool test(Index i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & std::uint64_t{1};
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  Index count() const {
    Index c = 0;
    for (const auto w : words_) c += std::popcount(w);
    return c;
  }
  Index count_and(const Bitset& other) const {
    Index c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }
  Bitset operator&(const Bitset& other) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }
  Bitset minus(const Bitset& other) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
  }
  bool subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool operator==(const Bitset&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Closed balls around every point at every radius, as prefix bitsets of the
// point's neighbors sorted by distance.
class BallIndex {
 public:
  explicit BallIndex(const FiniteMetric& m) : m_(m) {
    const Index n = m.size();
    order_.resize(static_cast<std::size_t>(n));
    sorted_.resize(static_cast<std::size_t>(n));
    prefix_.resize(static_cast<std::size_t>(n));
    for (Index y = 0; y < n; ++y) {
      auto& order = order_[static_cast<std::size_t>(y)];
      order.resize(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), Index{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](Index a, Index b) { return m(y, a) < m(y, b); });
      auto& sorted = sorted_[static_cast<std::size_t>(y)];
      auto& prefix = prefix_[static_cast<std::size_t>(y)];
      sorted.reserve(order.size());
      prefix.reserve(order.size() + 1);
      Bitset acc(n);
      prefix.push_back(acc);
      for (const Index p : order) {
        sorted.push_back(m(y, p));
        acc.set(p);
        prefix.push_back(acc);
      }
    }
  }

  /// Number of points within closed distance r of y.
  Index rank(PointId y, double r) const {
    const auto& sorted = sorted_[static_cast<std::size_t>(y)];
    const double threshold = r / (1.0 - kRelTol);
    return static_cast<Index>(std::upper_bound(sorted.begin(), sorted.end(), threshold) -
                              sorted.begin());
  }
  const Bitset& ball(PointId y, double r) const {
    return prefix_[static_cast<std::size_t>(y)][static_cast<std::size_t>(rank(y, r))];
  }
  const std::vector<Index>& order(PointId y) const { return order_[static_cast<std::size_t>(y)]; }
  const std::vector<double>& sorted(PointId y) const {
    return sorted_[static_cast<std::size_t>(y)];
  }
  Index size() const { return m_.size(); }

 private:
  const FiniteMetric& m_;
  std::vector<std::vector<Index>> order_;
  std::vector<std::vector<double>> sorted_;
  std::vector<std::vector<Bitset>> prefix_;
};

struct CandidateSet {
  PointId center;
  Bitset members;
  Index size;
};

std::vector<CandidateSet> candidate_sets(const BallIndex& balls, PointId x, double r,
                                         const Bitset& universe) {
  std::vector<CandidateSet> sets;
  const Index reach = balls.rank(x, 3.0 * r);
  const auto& order = balls.order(x);
  for (Index k = 0; k < reach; ++k) {
    const PointId y = order[static_cast<std::size_t>(k)];
    Bitset members = balls.ball(y, r) & universe;
    const Index size = members.count();
    if (size > 0) sets.push_back({y, std::move(members), size});
  }
  std::sort(sets.begin(), sets.end(),
            [](const CandidateSet& a, const CandidateSet& b) { return a.center < b.center; });
  return sets;
}

std::vector<PointId> greedy_cover(const std::vector<CandidateSet>& sets, const Bitset& universe) {
  std::vector<PointId> cover;
  Bitset uncovered = universe;
  while (!uncovered.none()) {
    std::size_t best = 0;
    Index best_gain = -1;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const Index gain = sets[s].members.count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    cover.push_back(sets[best].center);
    uncovered = uncovered.minus(sets[best].members);
  }
  return cover;
}

class ExactCoverSearch {
 public:
  ExactCoverSearch(std::vector<CandidateSet> sets, const Bitset& universe,
                   std::vector<PointId> upper)
      : best_(std::move(upper)) {
    // Drop sets dominated by another set; larger sets (then lower ids) win.
    std::stable_sort(sets.begin(), sets.end(), [](const CandidateSet& a, const CandidateSet& b) {
      return a.size > b.size;
    });
    for (auto& s : sets) {
      const bool dominated = std::any_of(sets_.begin(), sets_.end(), [&](const CandidateSet& k) {
        return s.members.subset_of(k.members);
      });
      if (!dominated) sets_.push_back(std::move(s));
    }
    universe.for_each([&](Index e) {
      std::vector<std::size_t> containing;
      for (std::size_t s = 0; s < sets_.size(); ++s)
        if (sets_[s].members.test(e)) containing.push_back(s);
      containing_.emplace(e, std::move(containing));
    });
    search(universe);
  }

  const std::vector<PointId>& best() const { return best_; }

 private:
  void search(const Bitset& uncovered) {
    if (uncovered.none()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;
    Index max_gain = 0;
    for (const auto& s : sets_) max_gain = std::max(max_gain, s.members.count_and(uncovered));
    const Index remaining = uncovered.count();
    const auto lower = static_cast<std::size_t>((remaining + max_gain - 1) / max_gain);
    if (chosen_.size() + lower >= best_.size()) return;

    // Branch on the uncovered element with the fewest covering sets.
    const std::vector<std::size_t>* branch = nullptr;
    uncovered.for_each([&](Index e) {
      const auto& c = containing_.at(e);
      if (branch == nullptr || c.size() < branch->size()) branch = &c;
    });
    std::vector<std::size_t> options = *branch;
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return sets_[a].members.count_and(uncovered) > sets_[b].members.count_and(uncovered);
    });
    for (const std::size_t s : options) {
      chosen_.push_back(sets_[s].center);
      search(uncovered.minus(sets_[s].members));
      chosen_.pop_back();
    }
  }

  std::vector<CandidateSet> sets_;
  std::map<Index, std::vector<std::size_t>> containing_;
  std::vector<PointId> chosen_;
  std::vector<PointId> best_;
};

Index cover_size(const BallIndex& balls, PointId x, double r, bool exact,
                 std::vector<PointId>* cover) {
  const Bitset& universe = balls.ball(x, 2.0 * r);
  auto sets = candidate_sets(balls, x, r, universe);
  std::vector<PointId> best = greedy_cover(sets, universe);
  if (exact && best.size() > 1) best = ExactCoverSearch(std::move(sets), universe, best).best();
  std::sort(best.begin(), best.end());
  const auto size = static_cast<Index>(best.size());
  if (cover != nullptr) *cover = std::move(best);
  return size;
}

// Radii at which B(x, 2r) or B(x, r) changes, ascending and distinct.
std::vector<double> candidate_radii(const BallIndex& balls, PointId x) {
  std::vector<double> radii;
  for (const double d : balls.sorted(x)) {
    if (d <= 0.0) continue;
    radii.push_back(d / 2.0);
    radii.push_back(d);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

}  // namespace

Index min_cover_size(const FiniteMetric& m, PointId center, double r, bool exact,
                     std::vector<PointId>* cover) {
  const BallIndex balls(m);
  return cover_size(balls, center, r, exact, cover);
}

DimensionEstimate doubling_estimate(const FiniteMetric& m, Index exact_max_n) {
  DimensionEstimate est;
  const Index n = m.size();
  const bool exact = n <= exact_max_n;
  est.mode = exact ? CoverMode::ExactCover : CoverMode::GreedyCover;
  if (n == 0) return est;
  est.upper_cover = {0};
  const BallIndex balls(m);
  std::vector<PointId> cover;
  for (PointId x = 0; x < n; ++x) {
    for (const double r : candidate_radii(balls, x)) {
      const Index size = cover_size(balls, x, r, exact, &cover);
      if (size > est.lambda_upper) {
        est.lambda_upper = size;
        est.upper_center = x;
        est.upper_radius = r;
        est.upper_cover = cover;
      }
    }
  }
  est.dim_upper = std::log2(static_cast<double>(est.lambda_upper));
  return est;
}

DimensionEstimate packing_lower_bound(const FiniteMetric& m) {
  DimensionEstimate est;
  const Index n = m.size();
  if (n == 0) return est;
  est.lower_witness = {0};
  const BallIndex balls(m);
  std::vector<PointId> packing;
  for (PointId x = 0; x < n; ++x) {
    for (const double r : candidate_radii(balls, x)) {
      packing.clear();
      balls.ball(x, r).for_each([&](Index p) {
        const bool separated = std::all_of(packing.begin(), packing.end(), [&](PointId q) {
          return approx_ge(m(p, q), r / 2.0);
        });
        if (separated) packing.push_back(p);
      });
      if (packing.size() > est.lower_witness.size()) {
        est.lower_witness = packing;
        est.lower_center = x;
        est.lower_radius = r;
      }
    }
  }
  bool ok = true;
  for (std::size_t a = 0; a < est.lower_witness.size(); ++a) {
    const PointId p = est.lower_witness[a];
    ok = ok && approx_le(m(est.lower_center, p), est.lower_radius);
    for (std::size_t b = a + 1; b < est.lower_witness.size(); ++b)
      ok = ok && approx_ge(m(p, est.lower_witness[b]), est.lower_radius / 2.0);
  }
  est.lower_verified = ok;
  est.dim_lower = ok ? 0.5 * std::log2(static_cast<double>(est.lower_witness.size())) : 0.0;
  return est;
}

DimensionEstimate estimate_dimension(const FiniteMetric& m, Index exact_max_n) {
  DimensionEstimate est = doubling_estimate(m, exact_max_n);
  const DimensionEstimate lower = packing_lower_bound(m);
  est.dim_lower = lower.dim_lower;
  est.lower_center = lower.lower_center;
  est.lower_radius = lower.lower_radius;
  est.lower_witness = lower.lower_witness;
  est.lower_verified = lower.lower_verified;
  return est;
}

}  // namespace dcomp
