#include "cvb/deriv_bounds.hpp"

#include <cmath>

#include "cvb/convexity.hpp"
#include "cvb/defaults.hpp"
#include "cvb/quadrature.hpp"

namespace cvb {

namespace {

void require_shape(const FunctionSpec& f, Interval iv, int level, const char* what) {
  ConvexityCertificate cert = certify(f, iv, level);
  if (!cert.convex_ok()) throw ConvexityError(what, cert);
}

double integral_mean(const FunctionSpec& f, Interval iv) {
  return integrate(f, iv, defaults::kFiniteTol).value / iv.width();
}

// Same side validation find_split applies to its own candidate: derivative
// concave left of c, convex right of c, degenerate slivers skipped.
void validate_split_point(const FunctionSpec& f, Interval iv, double c) {
  const double skip_width = iv.width() * 1e-6;
  if (c - iv.a >= skip_width) {
    ConvexityCertificate left = certify(f, Interval(iv.a, c), 1);
    if (!left.concave_ok())
      throw NoSuchSplitError("derivative is not concave left of the supplied point");
  }
  if (iv.b - c >= skip_width) {
    ConvexityCertificate right = certify(f, Interval(c, iv.b), 1);
    if (!right.convex_ok())
      throw NoSuchSplitError("derivative is not convex right of the supplied point");
  }
}

}  // namespace

InflectionBound inflection_hadamard(const FunctionSpec& f, Interval iv, std::optional<double> c) {
  double split;
  if (c) {
    if (!iv.contains(*c)) throw ParameterError("switch point lies outside the interval");
    validate_split_point(f, iv, *c);
    split = *c;
  } else {
    split = find_split(f, iv);
  }
  double w = iv.width();
  double gap = ((split - iv.a) * f(iv.a) + (iv.b - split) * f(iv.b)) / w - integral_mean(f, iv);
  double da = f.jet(iv.a, 1).d1();
  double db = f.jet(iv.b, 1).d1();
  double dc = f.jet(split, 1).d1();
  double bc = iv.b - split;
  double ca = split - iv.a;
  double upper = (bc * bc / w * db - ca * ca / w * da + (iv.midpoint() - split) * dc) / 3.0;
  return {split, GapReport{gap, std::nullopt, upper}};
}

Enclosure moment_enclosure(const FunctionSpec& f, Interval iv) {
  require_shape(f, iv, 1, "derivative failed its convexity check on the interval");
  double w = iv.width();
  double mid = iv.midpoint();
  const Expression& e = f.expr;
  auto about_mid = [&e, mid](double x) { return (x - mid) * eval_value(e, x); };
  double moment = integrate(about_mid, iv, defaults::kFiniteTol).value;
  double da = f.jet(iv.a, 1).d1();
  double db = f.jet(iv.b, 1).d1();
  double lo = w * w / 8.0 * (f(iv.b) - f(iv.a)) - w * w * w / 48.0 * (da + db);
  double hi = w * w * w / 24.0 * (da + db);
  return {lo, moment, hi};
}

Enclosure trapezoid_gap_enclosure(const FunctionSpec& f, Interval iv) {
  require_shape(f, iv, 2, "second derivative failed its convexity check on the interval");
  double w = iv.width();
  double gap = 0.5 * (f(iv.a) + f(iv.b)) - integral_mean(f, iv);
  Jet ja = f.jet(iv.a, 2);
  Jet jb = f.jet(iv.b, 2);
  double lo = w / 8.0 * (jb.d1() - ja.d1()) - w * w / 48.0 * (ja.d2() + jb.d2());
  double hi = w * w / 24.0 * (ja.d2() + jb.d2());
  return {lo, gap, hi};
}

Enclosure mean_enclosure_endpoint(const FunctionSpec& f, Interval iv) {
  require_shape(f, iv, 1, "derivative failed its convexity check on the interval");
  double w = iv.width();
  double lo = (f(iv.a) + 2.0 * f(iv.b)) / 3.0 - f.jet(iv.b, 1).d1() * w / 6.0;
  double hi = (f(iv.b) + 2.0 * f(iv.a)) / 3.0 + f.jet(iv.a, 1).d1() * w / 6.0;
  return {lo, integral_mean(f, iv), hi};
}

Enclosure mean_enclosure_midpoint(const FunctionSpec& f, Interval iv) {
  require_shape(f, iv, 1, "derivative failed its convexity check on the interval");
  double w = iv.width();
  double mid = iv.midpoint();
  double left = integrate(f, Interval(iv.a, mid), defaults::kFiniteTol).value;
  double right = integrate(f, Interval(mid, iv.b), defaults::kFiniteTol).value;
  double fm = f(mid);
  double lo = f(iv.a) + 2.0 * fm - 4.0 / w * left;
  double hi = f(iv.b) + 2.0 * fm - 4.0 / w * right;
  return {lo, (left + right) / w, hi};
}

GapReport half_interval_gap(const FunctionSpec& f, Interval iv) {
  require_shape(f, iv, 1, "derivative failed its convexity check on the interval");
  double mid = iv.midpoint();
  double left = integrate(f, Interval(iv.a, mid), defaults::kFiniteTol).value;
  double right = integrate(f, Interval(mid, iv.b), defaults::kFiniteTol).value;
  double upper = iv.width() * (f(iv.b) - f(iv.a)) / 4.0;
  return {right - left, std::nullopt, upper};
}

Enclosure log_mean_bound(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw ParameterError("both endpoints must be positive and finite");
  if (a > b) throw ParameterError("endpoints must satisfy a <= b");
  double s = 4.0 * (a + b);
  double geo = std::pow(a, (3.0 * a + b) / s) * std::pow(b, (a + 3.0 * b) / s);
  double arith = ((3.0 * a + b) * a + (a + 3.0 * b) * b) / s;
  return {geo, 0.5 * (a + b), arith};
}

}  // namespace cvb
