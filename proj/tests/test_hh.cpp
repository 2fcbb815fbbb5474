#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "cvb/hh.hpp"
#include "cvb/random_convex.hpp"
#include "cvb/rng.hpp"

using namespace cvb;

namespace {

FunctionSpec fs(const char* src) { return FunctionSpec::literal(src); }

}  // namespace

TEST_CASE("midpoint/mean/trapezoid bracket for exp") {
  Enclosure e = hh(fs("exp(x)"), Interval(0.0, 1.0));
  CHECK(e.lower == doctest::Approx(std::sqrt(M_E)).epsilon(1e-12));
  CHECK(e.value == doctest::Approx(M_E - 1.0).epsilon(1e-10));
  CHECK(e.upper == doctest::Approx(0.5 * (1.0 + M_E)).epsilon(1e-12));
  CHECK(e.holds(1e-9));
  CHECK(e.slack_lower() > 0.0);
  CHECK(e.slack_upper() > 0.0);
}

TEST_CASE("bracket rejects non-convex integrands") {
  CHECK_THROWS_AS(hh(fs("sin(x)"), Interval(0.0, 3.0)), ConvexityError);
  try {
    hh(fs("x^2*(2-x)^2"), Interval(0.0, 2.0));
    FAIL("expected ConvexityError");
  } catch (const ConvexityError& err) {
    CHECK(err.certificate().verdict == Verdict::Neither);
    CHECK(err.certificate().witness_x.has_value());
  }
  // affine integrands are admitted (degenerate equality)
  Enclosure e = hh(fs("2*x+1"), Interval(0.0, 1.0));
  CHECK(e.lower == doctest::Approx(e.upper).epsilon(1e-12));
}

TEST_CASE("reflection surplus is nonnegative for convex f") {
  CHECK(reflection_gap(fs("x^2"), Interval(0.0, 1.0), 0.3) ==
        doctest::Approx(0.42).epsilon(1e-14));
  CHECK(reflection_gap(fs("x^2"), Interval(0.0, 1.0), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // zero at the endpoints
  CHECK(reflection_gap(fs("x^2"), Interval(0.0, 1.0), 0.0) == 0.0);
  CHECK_THROWS_AS(reflection_gap(fs("x^2"), Interval(0.0, 1.0), 1.5),
                  ParameterError);

  std::vector<double> xs{0.1, 0.25, 0.5, 0.9};
  auto gaps = reflection_gaps(fs("exp(x)"), Interval(-1.0, 1.0), xs);
  REQUIRE(gaps.size() == 4);
  for (double g : gaps) CHECK(g >= 0.0);
}

TEST_CASE("Riemann sum sandwich") {
  // x^2 on [0,1], n = 2: f(3/4) <= (f(1/2)+f(1))/2 <= (f(0)/2 + 3 f(1)/2)/2
  Enclosure e = riemann_sandwich(fs("x^2"), Interval(0.0, 1.0), 2);
  CHECK(e.lower == doctest::Approx(9.0 / 16.0).epsilon(1e-14));
  CHECK(e.value == doctest::Approx(5.0 / 8.0).epsilon(1e-14));
  CHECK(e.upper == doctest::Approx(3.0 / 4.0).epsilon(1e-14));
  CHECK(e.holds(1e-12));

  // n = 1 collapses every side to f(b)
  e = riemann_sandwich(fs("x^2"), Interval(0.0, 1.0), 1);
  CHECK(e.lower == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.upper == doctest::Approx(1.0).epsilon(1e-14));

  // the sum approaches the mean from above as n grows
  Enclosure e8 = riemann_sandwich(fs("exp(x)"), Interval(0.0, 1.0), 8);
  Enclosure e64 = riemann_sandwich(fs("exp(x)"), Interval(0.0, 1.0), 64);
  CHECK(e8.holds(1e-12));
  CHECK(e64.holds(1e-12));
  CHECK(e64.value < e8.value);
  CHECK(e64.value > M_E - 1.0);

  CHECK_THROWS_AS(riemann_sandwich(fs("x^2"), Interval(0.0, 1.0), 0),
                  ParameterError);
}

TEST_CASE("log-weighted mean refines the upper half") {
  // x^2 on [0,1]: mean 1/3, weighted middle 7/18, trapezoid 1/2
  Enclosure e = refined_rhh(fs("x^2"), Interval(0.0, 1.0));
  CHECK(e.lower == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(e.value == doctest::Approx(7.0 / 18.0).epsilon(1e-7));
  CHECK(e.upper == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e.holds(1e-7));

  // affine f: every side equals the mean
  e = refined_rhh(fs("x"), Interval(0.0, 1.0));
  CHECK(e.lower == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(e.upper == doctest::Approx(0.5).epsilon(1e-14));

  // interval away from [0,1]
  e = refined_rhh(fs("exp(x)"), Interval(-0.5, 1.5));
  CHECK(e.holds(1e-7));
}

TEST_CASE("weighted endpoint bound with admissible weights") {
  // f = x^2, weight (x-1/2)^2 on [0,1]: integral f*g = 1/30, bound 1/24
  BoundPair p = fejer_upper(fs("x^2"), fs("(x-0.5)^2"), Interval(0.0, 1.0));
  CHECK(p.lhs == doctest::Approx(1.0 / 30.0).epsilon(1e-9));
  CHECK(p.rhs == doctest::Approx(1.0 / 24.0).epsilon(1e-9));
  CHECK(p.holds(1e-12));

  // constant weight reduces to the plain endpoint average (times width)
  p = fejer_upper(fs("exp(x)"), fs("1"), Interval(0.0, 2.0));
  CHECK(p.lhs == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-9));
  CHECK(p.rhs == doctest::Approx(1.0 + std::exp(2.0)).epsilon(1e-12));

  // cosine bump symmetric about the midpoint
  p = fejer_upper(fs("x^2"), fs("1+cos(2*pi*(x-0.5))"), Interval(0.0, 1.0));
  CHECK(p.holds(1e-10));
}

TEST_CASE("weighted endpoint bound rejects bad weights") {
  CHECK_THROWS_AS(fejer_upper(fs("x^2"), fs("x-0.5"), Interval(0.0, 1.0)),
                  NegativityError);
  CHECK_THROWS_AS(fejer_upper(fs("x^2"), fs("x"), Interval(0.0, 1.0)),
                  SymmetryError);
  try {
    fejer_upper(fs("x^2"), fs("x-0.5"), Interval(0.0, 1.0));
    FAIL("expected NegativityError");
  } catch (const NegativityError& err) {
    CHECK(err.witness() < 0.5);  // violation lives in the left half
  }
  // non-convex integrand still rejected before the weight is touched
  CHECK_THROWS_AS(fejer_upper(fs("sin(x)"), fs("1"), Interval(0.0, 3.0)),
                  ConvexityError);
}

TEST_CASE("composite rules tighten by depth") {
  // x^2 on [0,1]: trapezoid - midpoint gap is exactly (h^2)/4 at cell width h
  for (int depth = 0; depth <= 6; ++depth) {
    Enclosure e = composite_hh_depth(fs("x^2"), Interval(0.0, 1.0), depth);
    double h = std::ldexp(1.0, -depth);
    CHECK(e.gap() == doctest::Approx(h * h / 4.0).epsilon(1e-10));
    CHECK(e.holds(1e-10));
    CHECK(e.value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(composite_hh_depth(fs("x^2"), Interval(0.0, 1.0), 31),
                  ParameterError);
  CHECK_THROWS_AS(composite_hh_depth(fs("x^2"), Interval(0.0, 1.0), -1),
                  ParameterError);
}

TEST_CASE("composite refinement reaches a requested gap") {
  Enclosure e = composite_hh(fs("x^2"), Interval(0.0, 1.0), 1e-3);
  CHECK(e.gap() <= 1e-3);
  CHECK(e.holds(1e-10));

  // affine function: gap is zero at depth zero
  e = composite_hh(fs("3*x-2"), Interval(0.0, 1.0), 1e-15);
  CHECK(e.gap() <= 1e-15);

  CHECK_THROWS_AS(composite_hh(fs("x^2"), Interval(0.0, 1.0), 0.0),
                  ParameterError);
}

TEST_CASE("composite refinement reports the best bracket when it stalls") {
  try {
    composite_hh(fs("x^2"), Interval(0.0, 1.0), 1e-12, 3);
    FAIL("expected TargetNotReachedError");
  } catch (const TargetNotReachedError& err) {
    CHECK(err.achieved_gap == doctest::Approx(1.0 / 256.0).epsilon(1e-10));
    CHECK(err.enclosure.gap() == doctest::Approx(1.0 / 256.0).epsilon(1e-10));
    CHECK(err.enclosure.lower <= 1.0 / 3.0);
    CHECK(err.enclosure.upper >= 1.0 / 3.0);
  }
}

TEST_CASE("series sandwich for exponential decay") {
  // sum exp(-(k-1/2)) = sqrt(e)/(e-1), integral = 1,
  // upper = 1/2 + 1/(e-1)
  Enclosure e = series_sandwich(fs("exp(-x)"), SeriesVariant::half_shift);
  CHECK(e.lower == doctest::Approx(std::sqrt(M_E) / (M_E - 1.0)).epsilon(1e-9));
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(e.upper == doctest::Approx(0.5 + 1.0 / (M_E - 1.0)).epsilon(1e-9));
  CHECK(e.holds(1e-9));

  Enclosure w = series_sandwich(fs("exp(-x)"), SeriesVariant::integer);
  CHECK(w.lower == doctest::Approx(1.0 / (M_E - 1.0)).epsilon(1e-9));
  CHECK(w.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(w.upper == doctest::Approx(1.0 + 1.0 / (M_E - 1.0)).epsilon(1e-9));

  // the half-shift bracket nests inside the integer one
  CHECK(w.lower <= e.lower + 1e-12);
  CHECK(e.upper <= w.upper + 1e-12);
}

TEST_CASE("series sandwich on a power tail") {
  // g = 1/(1+x)^2: integral over [0,inf) is 1
  Enclosure e = series_sandwich(fs("1/(1+x)^2"), SeriesVariant::integer);
  CHECK(e.value == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(e.lower == doctest::Approx(M_PI * M_PI / 6.0 - 1.0).epsilon(1e-8));
  CHECK(e.upper == doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-8));
  CHECK(e.holds(1e-8));
}

TEST_CASE("series sandwich enforces its hypotheses") {
  // affine (constant) term function: not strictly admissible, not summable
  CHECK_THROWS_AS(series_sandwich(fs("0.5"), SeriesVariant::integer),
                  ConvexityError);
  // concave decreasing
  CHECK_THROWS_AS(series_sandwich(fs("1-x^2"), SeriesVariant::half_shift),
                  ConvexityError);
  // convex but increasing: the term check rejects it
  CHECK_THROWS_AS(series_sandwich(fs("exp(x)"), SeriesVariant::integer),
                  PreconditionError);
  // convex decreasing but non-integrable: divergence detected
  CHECK_THROWS_AS(series_sandwich(fs("1/(1+x)"), SeriesVariant::integer),
                  QuadratureError);
}

TEST_CASE("property: random convex draws satisfy every finite-interval bracket") {
  for (int trial = 0; trial < 50; ++trial) {
    CounterRng rng(101, static_cast<std::uint64_t>(trial));
    FunctionSpec f = random_convex(rng, GeneratorClass::convex_f);
    REQUIRE(f.domain.has_value());
    Interval iv = *f.domain;

    Enclosure e = hh(f, iv);
    CHECK_MESSAGE(e.holds(1e-8), f.expr.source_text());

    Enclosure r = riemann_sandwich(f, iv, 1 + static_cast<long>(trial % 7));
    CHECK_MESSAGE(r.holds(1e-8), f.expr.source_text());

    Enclosure c = composite_hh_depth(f, iv, trial % 5);
    CHECK_MESSAGE(c.holds(1e-8), f.expr.source_text());

    double x = iv.a + iv.width() * 0.37;
    CHECK(reflection_gap(f, iv, x) >= -1e-10);
  }
}
