#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "cvb/hardy.hpp"

using namespace cvb;

namespace {

FunctionSpec fs(const char* src) { return FunctionSpec::literal(src); }

}  // namespace

TEST_CASE("weighted norm quotient for exponential decay, p = 2") {
  // alpha = 1, p = 2: the quotient is 2 sqrt(ln 2), independent of the rate
  Enclosure e = hardy_ratio(fs("exp(-x)"), {1.0, 2.0});
  CHECK(e.lower == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(e.upper == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.value == doctest::Approx(2.0 * std::sqrt(std::log(2.0))).epsilon(1e-8));
  CHECK(e.holds(1e-10));

  Enclosure e2 = hardy_ratio(fs("exp(-2*x)"), {1.0, 2.0});
  CHECK(e2.value == doctest::Approx(e.value).epsilon(1e-8));

  Enclosure e5 = hardy_ratio(fs("exp(-0.4*x)"), {1.0, 2.0});
  CHECK(e5.value == doctest::Approx(e.value).epsilon(1e-8));
}

TEST_CASE("weighted norm quotient hugs its bounds at large p") {
  // alpha = 1, p = 256: both bounds approach 1 and the quotient sits in the
  // sliver between 2^(1/256) and 256/255
  Enclosure e = hardy_ratio(fs("exp(-x)"), {1.0, 256.0});
  CHECK(e.lower == doctest::Approx(std::exp2(1.0 / 256.0)).epsilon(1e-14));
  CHECK(e.upper == doctest::Approx(256.0 / 255.0).epsilon(1e-14));
  CHECK(e.value == doctest::Approx(1.002716391794).epsilon(1e-8));
  CHECK(e.holds(0.0));
  CHECK(e.slack_lower() > 1e-7);
  CHECK(e.slack_upper() > 1e-4);
}

TEST_CASE("quotient responds to alpha") {
  Enclosure e = hardy_ratio(fs("exp(-x)"), {1.2, 3.0});
  CHECK(e.lower == doctest::Approx(std::exp2(1.0 - 1.2 + 1.0 / 3.0)).epsilon(1e-14));
  CHECK(e.upper == doctest::Approx(1.0 / (1.2 - 1.0 / 3.0)).epsilon(1e-14));
  CHECK(e.holds(1e-10));

  // a non-exponential admissible function
  e = hardy_ratio(fs("1/(1+x)^3"), {1.0, 2.0});
  CHECK(e.holds(1e-10));
}

TEST_CASE("quotient parameter validation") {
  CHECK_THROWS_AS(hardy_ratio(fs("exp(-x)"), {1.0, 1.0}), ParameterError);
  CHECK_THROWS_AS(hardy_ratio(fs("exp(-x)"), {1.0, 0.5}), ParameterError);
  CHECK_THROWS_AS(hardy_ratio(fs("exp(-x)"), {0.25, 2.0}), ParameterError);
}

TEST_CASE("quotient hypothesis checks") {
  // increasing
  CHECK_THROWS_AS(hardy_ratio(fs("exp(x)"), {1.0, 2.0}), PreconditionError);
  // zero at the origin
  CHECK_THROWS_AS(hardy_ratio(fs("x"), {1.0, 2.0}), PreconditionError);
  // negative at the origin
  CHECK_THROWS_AS(hardy_ratio(fs("-exp(-x)"), {1.0, 2.0}), PreconditionError);
  // dips negative inside the sampled window
  CHECK_THROWS_AS(hardy_ratio(fs("1-x/4"), {1.0, 2.0}), PreconditionError);
}

TEST_CASE("quotient near the divergence boundary fails as a precondition") {
  // alpha*p = 1.02: the upper-norm integrand decays like x^(-1.02) at
  // infinity, which the horizon budget cannot close
  CHECK_THROWS_AS(hardy_ratio(fs("exp(-x)"), {0.51, 2.0}), PreconditionError);
}

TEST_CASE("n-fold product comparison") {
  // u = x, v = x^2 on [0,1]: (int x^3)^2 = 1/16 <= int x^2 int x^4 = 1/15
  std::vector<FunctionSpec> us{fs("x"), fs("x^2")};
  BoundPair p = holder_product_check(us, Interval(0.0, 1.0));
  CHECK(p.lhs == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
  CHECK(p.rhs == doctest::Approx(1.0 / 15.0).epsilon(1e-10));
  CHECK(p.holds(1e-12));

  // three factors
  std::vector<FunctionSpec> three{fs("x"), fs("x"), fs("x")};
  p = holder_product_check(three, Interval(0.0, 1.0));
  CHECK(p.lhs == doctest::Approx(std::pow(0.25, 3.0)).epsilon(1e-10));
  CHECK(p.rhs == doctest::Approx(std::pow(0.25, 3.0)).epsilon(1e-10));  // equality
  CHECK(p.holds(1e-10));

  std::vector<FunctionSpec> one{fs("x")};
  CHECK_THROWS_AS(holder_product_check(one, Interval(0.0, 1.0)), ParameterError);
  std::vector<FunctionSpec> neg{fs("x-2"), fs("x")};
  CHECK_THROWS_AS(holder_product_check(neg, Interval(0.0, 1.0)), NegativityError);
  std::vector<FunctionSpec> notconvex{fs("sin(x)"), fs("x")};
  CHECK_THROWS_AS(holder_product_check(notconvex, Interval(0.0, 3.0)), ConvexityError);
}

TEST_CASE("powers of nonnegative convex functions stay convex") {
  ConvexityCertificate c = power_convexity(fs("x^2+1"), Interval(-1.0, 1.0), 3);
  CHECK(c.verdict == Verdict::Convex);
  c = power_convexity(fs("exp(x)"), Interval(0.0, 2.0), 4);
  CHECK(c.verdict == Verdict::Convex);
  // constant base: the power is constant too
  c = power_convexity(fs("2"), Interval(0.0, 1.0), 5);
  CHECK(c.verdict == Verdict::Affine);
  CHECK_THROWS_AS(power_convexity(fs("x^2"), Interval(0.0, 1.0), 0), ParameterError);
  CHECK_THROWS_AS(power_convexity(fs("-(x^2)"), Interval(0.0, 1.0), 2), NegativityError);
}

TEST_CASE("endpoint product bound") {
  // u = x, v = exp(x) on [0,1]: mean of x e^x is 1,
  // bound is sqrt(0+1) * sqrt(1+e^2) / 2
  std::vector<FunctionSpec> us{fs("x"), fs("exp(x)")};
  BoundPair p = product_bound(us, Interval(0.0, 1.0));
  CHECK(p.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p.rhs == doctest::Approx(0.5 * std::sqrt(1.0 + M_E * M_E)).epsilon(1e-12));
  CHECK(p.holds(1e-12));

  std::vector<FunctionSpec> one{fs("x")};
  CHECK_THROWS_AS(product_bound(one, Interval(0.0, 1.0)), ParameterError);
}

TEST_CASE("conjugate-exponent endpoint bound") {
  BoundPair p = holder_pair_bound(fs("x"), fs("exp(x)"), Interval(0.0, 1.0), 2.0, 2.0);
  CHECK(p.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p.rhs == doctest::Approx(0.5 * std::sqrt(1.0 + M_E * M_E)).epsilon(1e-12));
  CHECK(p.holds(1e-12));

  // asymmetric conjugate pair
  p = holder_pair_bound(fs("x"), fs("exp(x)"), Interval(0.0, 1.0), 3.0, 1.5);
  double expect = 0.5 * std::pow(1.0, 1.0 / 3.0) *
                  std::pow(1.0 + std::exp(1.5), 1.0 / 1.5);
  CHECK(p.rhs == doctest::Approx(expect).epsilon(1e-12));
  CHECK(p.holds(1e-12));

  CHECK_THROWS_AS(holder_pair_bound(fs("x"), fs("x"), Interval(0.0, 1.0), 2.0, 3.0),
                  ParameterError);
  CHECK_THROWS_AS(holder_pair_bound(fs("x"), fs("x"), Interval(0.0, 1.0), 1.0, 1.0),
                  ParameterError);
}
