#pragma once

#include <span>
#include <vector>

#include "cvb/convexity.hpp"
#include "cvb/enclosure.hpp"
#include "cvb/function_spec.hpp"

namespace cvb {

// Every entry point here first certifies the convexity hypothesis it relies
// on and throws ConvexityError when certification fails; the returned
// enclosures are then numeric instances of midpoint <= mean <= trapezoid
// style inequalities with the mean computed by adaptive quadrature.

/// Midpoint / integral mean / endpoint average bracket on [a, b].
Enclosure hh(const FunctionSpec& f, Interval iv);

/// Pointwise surplus f(a) + f(b) - f(a+b-x) - f(x), nonnegative for convex f.
double reflection_gap(const FunctionSpec& f, Interval iv, double x);
std::vector<double> reflection_gaps(const FunctionSpec& f, Interval iv,
                                    std::span<const double> xs);

/// Bracket around the n-term right Riemann sum of the mean:
///   f(((1-1/n)a + (1+1/n)b)/2)  <=  (1/n) sum f(a + k(b-a)/n)
///                               <=  (f(a)(1-1/n) + f(b)(1+1/n)) / 2.
Enclosure riemann_sandwich(const FunctionSpec& f, Interval iv, long n);

/// Sharpened upper half of the midpoint/mean/trapezoid bracket: the integral
/// mean against the weight ln((b-a)^2 / ((b-x)(x-a))) - 1 sits between the
/// plain mean and the endpoint average.
Enclosure refined_rhh(const FunctionSpec& f, Interval iv);

/// Weighted endpoint bound: integral of f*g against a nonnegative weight g
/// symmetric about the midpoint is at most the endpoint average of f times
/// the integral of g. Throws NegativityError / SymmetryError when g fails
/// its sampled hypothesis checks.
BoundPair fejer_upper(const FunctionSpec& f, const FunctionSpec& g, Interval iv);

/// Midpoint and trapezoid composite rules over 2^depth equal cells; both
/// converge to the mean from opposite sides for convex f.
Enclosure composite_hh_depth(const FunctionSpec& f, Interval iv, int depth);

struct TargetNotReachedError : Error {
  TargetNotReachedError(const std::string& what, double achieved, Enclosure best)
      : Error(what), achieved_gap(achieved), enclosure(best) {}
  double achieved_gap;
  Enclosure enclosure;
};

/// Deepens the composite bracket until its width is at most target_gap;
/// throws TargetNotReachedError (with the best bracket found) if max_depth
/// levels do not get there.
Enclosure composite_hh(const FunctionSpec& f, Interval iv, double target_gap,
                       int max_depth = 20);

enum class SeriesVariant {
  half_shift,  // sum over k - 1/2 below, g(0)/2 + sum over k above
  integer,     // sum over k below, g(0) + sum over k above
};

/// Series / half-line-integral sandwich for a positive, decreasing, convex
/// term function g:
///   half_shift:  sum g(k - 1/2)   <=  integral_0^inf g  <=  g(0)/2 + sum g(k)
///   integer:     sum g(k)         <=  integral_0^inf g  <=  g(0)   + sum g(k)
Enclosure series_sandwich(const FunctionSpec& g, SeriesVariant variant);

}  // namespace cvb
