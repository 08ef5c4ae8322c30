#pragma once

#include <algorithm>
#include <cmath>

namespace testing_support {

// |a - b| <= tol * max(1, |b|): relative for large values, absolute near zero.
inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline double relative_error(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace testing_support
