#pragma once

#include <cmath>

#include "cvb/errors.hpp"

namespace cvb {

/// Closed interval [a, b]. Invariant: a < b, both finite.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
      throw ParameterError("interval requires finite endpoints with a < b");
  }

  double width() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
  bool contains(double x) const { return x >= a && x <= b; }
};

}  // namespace cvb
