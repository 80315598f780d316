#pragma once

#include <algorithm>
#include <cmath>

namespace dcomp {

/// Relative tolerance used by every distance comparison in the library.
inline constexpr double kRelTol = 1e-9;

inline double tol_of(double a, double b) {
  return kRelTol * std::max({std::abs(a), std::abs(b), 1e-300});
}

/// a <= b up to relative tolerance.
inline bool approx_le(double a, double b) { return a <= b + tol_of(a, b); }
/// a >= b up to relative tolerance.
inline bool approx_ge(double a, double b) { return a + tol_of(a, b) >= b; }
inline bool approx_eq(double a, double b) { return std::abs(a - b) <= tol_of(a, b); }
/// a < b by more than the tolerance.
inline bool definitely_lt(double a, double b) { return !approx_ge(a, b); }

// Integer logarithms that are exact for powers of two.
inline int ceil_log2(double x) {
  int k = static_cast<int>(std::ceil(std::log2(x)));
  while (std::ldexp(1.0, k - 1) >= x) --k;
  while (std::ldexp(1.0, k) < x) ++k;
  return k;
}

inline int floor_log2(double x) {
  int k = static_cast<int>(std::floor(std::log2(x)));
  while (std::ldexp(1.0, k) > x) --k;
  while (std::ldexp(1.0, k + 1) <= x) ++k;
  return k;
}

}  // namespace dcomp
