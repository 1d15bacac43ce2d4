#pragma once

#include <algorithm>
#include <cmath>

namespace amorph {

/// Mixed absolute/relative floating-point equality.
///
/// Two reals a, b are equal when |a - b| <= abs + rel * max(|a|, |b|).
/// Eigenvalue grouping also requires a gap of at least `grouping_gap()`
/// between distinct groups.
struct Tolerance {
  double abs = 1e-8;
  double rel = 1e-8;

  static Tolerance uniform(double eps) { return {eps, eps}; }

  bool equal(double a, double b) const {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
  }

  double grouping_gap() const { return 100.0 * abs; }

  /// Nearest integer if `x` is within tolerance of it.
  bool near_integer(double x, long long* out = nullptr) const {
    double r = std::round(x);
    if (!equal(x, r)) return false;
    if (out) *out = static_cast<long long>(r);
    return true;
  }
};

}  // namespace amorph
