#pragma once

#include <array>

#include "cvb/expr.hpp"

namespace cvb {

/// Derivatives of a function at a point: c[k] = f^(k)(x) for k <= order.
/// Invariants: 0 <= order <= 3; all stored coefficients finite for points
/// inside the function's domain.
struct Jet {
  int order = 0;
  std::array<double, 4> c{};

  double value() const { return c[0]; }
  double d1() const { return c[1]; }
  double d2() const { return c[2]; }
  double d3() const { return c[3]; }
};

/// Evaluate `e` and its derivatives up to `order` (0..3) at x by truncated
/// Taylor arithmetic over the tree. Exact for polynomial subtrees. Integer
/// powers are computed by repeated multiplication and accept any base;
/// fractional powers require a positive base. Throws DomainError outside a
/// subexpression's domain and ParameterError for an order outside 0..3.
Jet eval_jet(const Expression& e, double x, int order);

}  // namespace cvb
