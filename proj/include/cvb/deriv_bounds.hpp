#pragma once

#include <optional>

#include "cvb/enclosure.hpp"
#include "cvb/function_spec.hpp"

namespace cvb {

struct InflectionBound {
  double c;
  GapReport report;
};

/// Bound on the secant-weighted endpoint average minus the integral mean,
/// at a point c where f' switches from concave to convex:
///   ((c-a)f(a) + (b-c)f(b))/(b-a) - mean
///     <= ( (b-c)^2 f'(b)/(b-a) - (c-a)^2 f'(a)/(b-a) + ((a+b)/2 - c) f'(c) ) / 3.
/// With no c supplied the switch point is located automatically; a supplied c
/// is validated against the same shape requirement.
InflectionBound inflection_hadamard(const FunctionSpec& f, Interval iv,
                                    std::optional<double> c = std::nullopt);

/// Two-sided bound on the first moment about the midpoint,
/// integral of (x - (a+b)/2) f(x), for convex f'.
Enclosure moment_enclosure(const FunctionSpec& f, Interval iv);

/// Two-sided bound on the trapezoid defect (f(a)+f(b))/2 - mean for convex f''.
Enclosure trapezoid_gap_enclosure(const FunctionSpec& f, Interval iv);

/// Endpoint-derivative bracket around the integral mean for convex f':
///   (f(a) + 2f(b))/3 - f'(b)(b-a)/6  <=  mean  <=  (f(b) + 2f(a))/3 + f'(a)(b-a)/6.
Enclosure mean_enclosure_endpoint(const FunctionSpec& f, Interval iv);

/// Midpoint-anchored bracket around the integral mean for convex f', using
/// the half-interval integrals:
///   f(a) + 2f(m) - (4/(b-a)) int_a^m f  <=  mean  <=  f(b) + 2f(m) - (4/(b-a)) int_m^b f.
Enclosure mean_enclosure_midpoint(const FunctionSpec& f, Interval iv);

/// One-sided bound for convex f: the right half-interval integral exceeds the
/// left one by at most (b-a)(f(b)-f(a))/4.
GapReport half_interval_gap(const FunctionSpec& f, Interval iv);

/// Scalar bracket around the midpoint (a+b)/2 between a weighted geometric
/// mean and a weighted arithmetic mean, for 0 < a <= b:
///   a^((3a+b)/(4(a+b))) b^((a+3b)/(4(a+b)))  <=  (a+b)/2
///     <=  ((3a+b)a + (a+3b)b)/(4(a+b)).
Enclosure log_mean_bound(double a, double b);

}  // namespace cvb
