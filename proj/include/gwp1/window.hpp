#pragma once

#include <algorithm>

namespace gwp1 {

/// Sentinel for an unbounded truncation order (the series is exact).
inline constexpr int kUnbounded = 1 << 28;

/// Saturating `floor - top`, used when a window floor is shifted by a degree.
inline int window_sub(int floor, int top) {
  if (floor >= kUnbounded || top <= -kUnbounded) return kUnbounded;
  if (top >= kUnbounded) return -kUnbounded;
  return std::clamp(floor - top, -kUnbounded, kUnbounded);
}

/// Saturating sum of two degree bounds.
inline int degree_add(int a, int b) {
  if (a <= -kUnbounded || b <= -kUnbounded) return -kUnbounded;
  if (a >= kUnbounded || b >= kUnbounded) return kUnbounded;
  return std::clamp(a + b, -kUnbounded, kUnbounded);
}

}  // namespace gwp1
