#pragma once

#include <span>

#include "cvb/convexity.hpp"
#include "cvb/enclosure.hpp"
#include "cvb/function_spec.hpp"

namespace cvb {

struct HardyParams {
  double alpha;
  double p;
};

/// Weighted-norm quotient on the half line for a nonnegative, non-increasing
/// f with f(0) > 0: with F(x) the running integral of f,
///   value = ||x^-alpha F||_p / ||x^(1-alpha) f||_p,
/// bracketed by 2^(1-alpha+1/p) below and 1/(alpha - 1/p) above.
/// Needs p > 1 and alpha*p > 1; throws PreconditionError when a norm fails
/// to converge.
Enclosure hardy_ratio(const FunctionSpec& f, HardyParams prm);

/// n-fold product comparison: (integral of the product)^n on the left,
/// product of the integrals of the n-th powers on the right, for n = us.size()
/// nonnegative convex factors.
BoundPair holder_product_check(std::span<const FunctionSpec> us, Interval iv);

/// Certificate for the n-th power of a nonnegative convex u; the verdict is
/// expected Convex (or Affine when u is constant).
ConvexityCertificate power_convexity(const FunctionSpec& u, Interval iv, long n);

/// Endpoint product bound: the integral mean of the n-fold product is at most
/// half the product of (u_k(a)^n + u_k(b)^n)^(1/n).
BoundPair product_bound(std::span<const FunctionSpec> us, Interval iv);

/// Conjugate-exponent endpoint bound: the integral mean of u*v is at most
///   (u(a)^p + u(b)^p)^(1/p) * (v(a)^q + v(b)^q)^(1/q) / 2
/// for nonnegative convex u, v and 1/p + 1/q = 1.
BoundPair holder_pair_bound(const FunctionSpec& u, const FunctionSpec& v, Interval iv, double p,
                            double q);

}  // namespace cvb
