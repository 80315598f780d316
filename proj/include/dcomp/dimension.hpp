#pragma once

#include "dcomp/metric.hpp"

#include <cstdint>
#include <vector>

namespace dcomp {

enum class CoverMode { ExactCover, GreedyCover };

const char* to_string(CoverMode mode);

/// Doubling-dimension evidence for a finite metric. Balls are closed.
///
/// The upper part comes from minimum covers of B(x, 2r) by balls B(y, r),
/// y ranging over the whole space. The lower part comes from a packing
/// S inside B(x, r) with pairwise distances >= r/2, which forces
/// dim >= log2|S| / 2.
struct DimensionEstimate {
  std::int64_t lambda_upper = 1;
  double dim_upper = 0.0;
  PointId upper_center = 0;
  double upper_radius = 0.0;
  std::vector<PointId> upper_cover;  // an optimal (exact mode) cover at the argmax

  double dim_lower = 0.0;
  PointId lower_center = 0;
  double lower_radius = 0.0;
  std::vector<PointId> lower_witness;
  bool lower_verified = true;

  CoverMode mode = CoverMode::ExactCover;
};

inline constexpr Index kDefaultExactMaxN = 64;

/// Fills the upper part. Exact branch-and-bound cover when n <= exact_max_n,
/// greedy set cover otherwise.
DimensionEstimate doubling_estimate(const FiniteMetric& m, Index exact_max_n = kDefaultExactMaxN);

/// Fills the lower part. The witness is re-verified by direct distance checks.
DimensionEstimate packing_lower_bound(const FiniteMetric& m);

/// Both parts.
DimensionEstimate estimate_dimension(const FiniteMetric& m, Index exact_max_n = kDefaultExactMaxN);

/// Minimum number of closed balls B(y, r), y in the space, covering
/// B(center, 2r). Exposed for tests and diagnostics.
Index min_cover_size(const FiniteMetric& m, PointId center, double r, bool exact,
                     std::vector<PointId>* cover = nullptr);

}  // namespace dcomp
