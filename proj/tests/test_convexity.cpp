#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "cvb/convexity.hpp"

using namespace cvb;

namespace {

ConvexityCertificate cert_of(const std::string& src, double a, double b,
                             int level = 0) {
  return certify(FunctionSpec::literal(src), Interval(a, b), level);
}

}  // namespace

TEST_CASE("plain shapes at level 0") {
  CHECK(cert_of("x^2", -1.0, 1.0).verdict == Verdict::Convex);
  CHECK(cert_of("-(x^2)", -1.0, 1.0).verdict == Verdict::Concave);
  CHECK(cert_of("exp(x)", -2.0, 2.0).verdict == Verdict::Convex);
  CHECK(cert_of("ln(x)", 0.5, 3.0).verdict == Verdict::Concave);
  CHECK(cert_of("2*x+1", -1.0, 1.0).verdict == Verdict::Affine);
  CHECK(cert_of("x^3", -1.0, 1.0).verdict == Verdict::Neither);
  CHECK(cert_of("x^3", 0.0, 2.0).verdict == Verdict::Convex);
  CHECK(cert_of("sin(x)", 0.0, 3.0).verdict == Verdict::Concave);
}

TEST_CASE("double-well polynomial is neither convex nor concave") {
  // 4x^2 - 4x^3 + x^4 has second derivative 8 - 24x + 12x^2, which is
  // positive at 0 and negative at 1
  auto cert = cert_of("x^2*(2-x)^2", 0.0, 2.0);
  CHECK(cert.verdict == Verdict::Neither);
  REQUIRE(cert.witness_x.has_value());
  REQUIRE(cert.witness_y.has_value());
  CHECK(Interval(0.0, 2.0).contains(*cert.witness_x));
  CHECK(Interval(0.0, 2.0).contains(*cert.witness_y));
  CHECK(cert.max_violation > cert.tolerance);
}

TEST_CASE("witness pair actually violates midpoint convexity") {
  auto cert = cert_of("x^3", -1.0, 1.0);
  REQUIRE(cert.verdict == Verdict::Neither);
  REQUIRE(cert.witness_x.has_value());
  double u = *cert.witness_x;
  double v = *cert.witness_y;
  auto f = [](double x) { return x * x * x; };
  double defect = f(0.5 * (u + v)) - 0.5 * (f(u) + f(v));
  // one of the two orientations must fail by more than the stated tolerance
  CHECK(std::fabs(defect) > cert.tolerance);
}

TEST_CASE("levels examine derivatives") {
  // x^3: f' = 3x^2 convex on any interval, f'' = 6x affine
  CHECK(cert_of("x^3", -1.0, 1.0, 1).verdict == Verdict::Convex);
  CHECK(cert_of("x^3", -1.0, 1.0, 2).verdict == Verdict::Affine);
  // x^2: f' = 2x affine
  CHECK(cert_of("x^2", -1.0, 1.0, 1).verdict == Verdict::Affine);
  // exp is its own derivative
  CHECK(cert_of("exp(x)", -1.0, 1.0, 1).verdict == Verdict::Convex);
  CHECK(cert_of("exp(x)", -1.0, 1.0, 2).verdict == Verdict::Convex);
  // -x^4: f' = -4x^3 is concave for x >= 0
  CHECK(cert_of("-(x^4)", 0.1, 2.0, 1).verdict == Verdict::Concave);
  // x^4: f'' = 12x^2
  CHECK(cert_of("x^4", -1.0, 1.0, 2).verdict == Verdict::Convex);
}

TEST_CASE("certificate bookkeeping") {
  auto cert = certify(FunctionSpec::literal("x^2"), Interval(0.0, 1.0), 0, 33,
                      1e-8);
  CHECK(cert.level == 0);
  CHECK(cert.grid_size == 33);
  CHECK(cert.tolerance >= 1e-8);  // scaled by sampled magnitude
  CHECK(cert.convex_ok());
  CHECK(!cert.concave_ok());

  auto aff = cert_of("2*x+1", -1.0, 1.0);
  CHECK(aff.convex_ok());
  CHECK(aff.concave_ok());
  CHECK(!aff.witness_x.has_value());

  CHECK(to_string(Verdict::Convex) == std::string("Convex"));
  CHECK(to_string(Verdict::Concave) == std::string("Concave"));
  CHECK(to_string(Verdict::Affine) == std::string("Affine"));
  CHECK(to_string(Verdict::Neither) == std::string("Neither"));
}

TEST_CASE("certify parameter validation") {
  FunctionSpec f = FunctionSpec::literal("x^2");
  Interval iv(0.0, 1.0);
  CHECK_THROWS_AS(certify(f, iv, 3), ParameterError);
  CHECK_THROWS_AS(certify(f, iv, -1), ParameterError);
  CHECK_THROWS_AS(certify(f, iv, 0, 8), ParameterError);
  CHECK_THROWS_AS(certify(f, iv, 0, defaults::kGrid, 0.0), ParameterError);
  // domain failures surface as DomainError
  CHECK_THROWS_AS(certify(FunctionSpec::literal("ln(x)"), Interval(-1.0, 1.0)),
                  DomainError);
}

TEST_CASE("find_split locates the inflection of f'") {
  // quartic centered at 1: f''' = 6k(x-1) crosses zero at 1
  double c = find_split(FunctionSpec::literal("0.25*(x-1)^4"), Interval(0.0, 2.0));
  CHECK(c == doctest::Approx(1.0).epsilon(1e-6));

  // shifted center, asymmetric interval
  c = find_split(FunctionSpec::literal("0.5*(x-0.75)^4 + 0.2*x^2"),
                 Interval(-1.0, 2.0));
  CHECK(c == doctest::Approx(0.75).epsilon(1e-6));

  // sin on [0, pi]: f''' = -cos goes negative then positive, split at pi/2
  c = find_split(FunctionSpec::literal("sin(x)"), Interval(0.0, M_PI));
  CHECK(c == doctest::Approx(M_PI / 2.0).epsilon(1e-6));
}

TEST_CASE("find_split degenerate sign patterns") {
  // f''' = e^x > 0 everywhere: f' convex on the whole interval, c = a
  double c = find_split(FunctionSpec::literal("exp(x)"), Interval(-1.0, 1.0));
  CHECK(c == -1.0);

  // f''' = -e^(-x) < 0 everywhere: f' concave on the whole interval, c = b
  c = find_split(FunctionSpec::literal("exp(-x)"), Interval(-1.0, 1.0));
  CHECK(c == 1.0);

  // cubic: f''' constant positive
  c = find_split(FunctionSpec::literal("x^3"), Interval(0.0, 1.0));
  CHECK(c == 0.0);
}

TEST_CASE("find_split rejects interleaved third-derivative signs") {
  // f''' = -cos on [0, 2pi]: negative, positive, negative again
  CHECK_THROWS_AS(
      find_split(FunctionSpec::literal("sin(x)"), Interval(0.0, 2.0 * M_PI)),
      NoSuchSplitError);
}
