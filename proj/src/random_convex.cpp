#include "cvb/random_convex.hpp"

#include <cstdio>
#include <string>

namespace cvb {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  if (v < 0.0) return "(" + std::string(buf) + ")";
  return buf;
}

Interval draw_domain(CounterRng& rng) {
  double a = rng.uniform(-1.5, 1.5);
  double w = rng.uniform(0.5, 2.5);
  return Interval(a, a + w);
}

// Affine part, free sign: never moves any convexity defect.
std::string affine_tail(CounterRng& rng) {
  return num(rng.uniform(-1.0, 1.0)) + "*x + " + num(rng.uniform(-1.0, 1.0));
}

}  // namespace

FunctionSpec random_convex(CounterRng& rng, GeneratorClass klass) {
  Interval iv = draw_domain(rng);
  std::string text;
  switch (klass) {
    case GeneratorClass::convex_f: {
      // Strictly convex mix of x^2, a one-sided exponential and an optional
      // small quartic. The exponent rate and the quartic share are capped so
      // halving a cell cuts the midpoint/trapezoid gap by 3.5x or better:
      // exp needs rate*width <= 2.5 for that, and the quartic needs
      // c4 <= ~0.2*c2 on the widest symmetric domain drawn here.
      double c2 = rng.uniform(0.5, 2.0);
      double c3 = rng.uniform(0.3, 1.0);
      double rate = rng.uniform(0.3, 1.0) * (rng.coin() ? 1.0 : -1.0);
      text = num(c2) + "*x^2 + " + num(c3) + "*exp(" + num(rate) + "*x) + " + affine_tail(rng);
      if (rng.coin()) text = num(rng.uniform(0.005, 0.05)) + "*x^4 + " + text;
      break;
    }
    case GeneratorClass::convex_fprime: {
      double c1 = rng.uniform(0.2, 1.0);
      double q = rng.uniform(-0.5, 0.5);
      text = num(c1) + "*x^3 + " + num(q) + "*x^2 + " + affine_tail(rng);
      if (rng.coin())
        text = num(rng.uniform(0.2, 1.0)) + "*exp(" + num(rng.uniform(0.3, 1.0)) + "*x) + " + text;
      break;
    }
    case GeneratorClass::convex_fsecond: {
      double c1 = rng.uniform(0.2, 0.8);
      double r3 = rng.uniform(-0.5, 0.5);
      double q = rng.uniform(-0.5, 0.5);
      text = num(c1) + "*x^4 + " + num(r3) + "*x^3 + " + num(q) + "*x^2 + " + affine_tail(rng);
      if (rng.coin())
        text = num(rng.uniform(0.2, 1.0)) + "*exp(" + num(rng.uniform(0.3, 1.0)) + "*x) + " + text;
      break;
    }
    case GeneratorClass::concave_convex_split: {
      // f''' = 6k(x-c) crosses zero once, at a point kept away from the ends.
      double c = iv.a + iv.width() * rng.uniform(0.2, 0.8);
      double k = rng.uniform(0.3, 1.0);
      double q = rng.uniform(0.0, 0.5);
      text = num(k / 4.0) + "*(x - " + num(c) + ")^4 + " + num(q) + "*x^2 + " + affine_tail(rng);
      break;
    }
  }
  FunctionSpec spec{parse(text), iv, Provenance{}};
  spec.provenance.generated = true;
  spec.provenance.klass = klass;
  return spec;
}

}  // namespace cvb
