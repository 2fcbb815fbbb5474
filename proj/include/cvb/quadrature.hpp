#pragma once

#include <functional>

#include "cvb/defaults.hpp"
#include "cvb/function_spec.hpp"
#include "cvb/interval.hpp"

namespace cvb {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // <= requested tolerance on success
  long subdivisions = 0;
};

using RealFn = std::function<double(double)>;

/// Adaptive integral of f over [iv.a, iv.b]. The integrand must be finite on
/// the open interval; endpoint singularities (integrable ones: logs,
/// x^p with p > -1) are handled by shrinking guard offsets with
/// extrapolation. Throws QuadratureError on non-convergence or a non-finite
/// interior sample.
QuadratureResult integrate(const RealFn& f, Interval iv, double tol = defaults::kFiniteTol);
QuadratureResult integrate(const FunctionSpec& f, Interval iv, double tol = defaults::kFiniteTol);

/// Integral over [0, inf) for integrands that eventually decrease to zero.
/// Doubles the truncation horizon until the last panel is negligible, then
/// closes the tail with the measured panel-decay ratio. Throws
/// QuadratureError when panel contributions stop decreasing (divergence) or
/// the horizon budget is exhausted.
QuadratureResult integrate_half_line(const RealFn& f, double tol = defaults::kHalfLineTol);
QuadratureResult integrate_half_line(const FunctionSpec& f, double tol = defaults::kHalfLineTol);

/// Sum of g(k - offset) over k = 1, 2, ... for positive decreasing g;
/// offset must be 0 or 1/2. Terms are added until they drop below tol, then
/// the tail is bracketed by integrals of g (valid for decreasing terms) and
/// the bracket midpoint is taken. Throws PreconditionError on non-decreasing
/// or non-positive terms, QuadratureError when the tail cannot be closed
/// within the term budget.
double sum_series(const RealFn& g, double offset, double tol = defaults::kSeriesTol);
double sum_series(const FunctionSpec& g, double offset, double tol = defaults::kSeriesTol);

namespace detail {
/// Integral over [lo, inf); same contract as integrate_half_line.
QuadratureResult integrate_from(const RealFn& f, double lo, double tol);
}  // namespace detail

}  // namespace cvb
