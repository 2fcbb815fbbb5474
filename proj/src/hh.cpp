#include "cvb/hh.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cvb/defaults.hpp"
#include "cvb/quadrature.hpp"

namespace cvb {

namespace {

void require_convex(const FunctionSpec& f, Interval iv, const char* role) {
  ConvexityCertificate cert = certify(f, iv, 0);
  if (!cert.convex_ok())
    throw ConvexityError(std::string(role) + " failed its convexity check on the interval", cert);
}

double integral_mean(const FunctionSpec& f, Interval iv) {
  return integrate(f, iv, defaults::kFiniteTol).value / iv.width();
}

struct CompositePair {
  double midpoint;
  double trapezoid;
};

CompositePair composite_pair(const FunctionSpec& f, Interval iv, int depth) {
  long n = 1L << depth;
  double h = iv.width() / static_cast<double>(n);
  double mid = 0.0;
  for (long i = 0; i < n; ++i) mid += f(iv.a + (static_cast<double>(i) + 0.5) * h);
  double trap = 0.5 * (f(iv.a) + f(iv.b));
  for (long i = 1; i < n; ++i) trap += f(iv.a + static_cast<double>(i) * h);
  double inv = 1.0 / static_cast<double>(n);
  return {mid * inv, trap * inv};
}

}  // namespace

Enclosure hh(const FunctionSpec& f, Interval iv) {
  require_convex(f, iv, "integrand");
  return {f(iv.midpoint()), integral_mean(f, iv), 0.5 * (f(iv.a) + f(iv.b))};
}

double reflection_gap(const FunctionSpec& f, Interval iv, double x) {
  require_convex(f, iv, "integrand");
  if (!iv.contains(x)) throw ParameterError("reflection point lies outside the interval");
  return f(iv.a) + f(iv.b) - f(iv.a + iv.b - x) - f(x);
}

std::vector<double> reflection_gaps(const FunctionSpec& f, Interval iv,
                                    std::span<const double> xs) {
  require_convex(f, iv, "integrand");
  std::vector<double> out;
  out.reserve(xs.size());
  double ends = f(iv.a) + f(iv.b);
  for (double x : xs) {
    if (!iv.contains(x)) throw ParameterError("reflection point lies outside the interval");
    out.push_back(ends - f(iv.a + iv.b - x) - f(x));
  }
  return out;
}

Enclosure riemann_sandwich(const FunctionSpec& f, Interval iv, long n) {
  if (n < 1) throw ParameterError("Riemann sandwich needs n >= 1");
  require_convex(f, iv, "integrand");
  double w = iv.width();
  double nn = static_cast<double>(n);
  double sum = 0.0;
  for (long k = 1; k <= n; ++k) sum += f(iv.a + w * static_cast<double>(k) / nn);
  double lo = f(0.5 * ((1.0 - 1.0 / nn) * iv.a + (1.0 + 1.0 / nn) * iv.b));
  double up = 0.5 * (f(iv.a) * (1.0 - 1.0 / nn) + f(iv.b) * (1.0 + 1.0 / nn));
  return {lo, sum / nn, up};
}

Enclosure refined_rhh(const FunctionSpec& f, Interval iv) {
  require_convex(f, iv, "integrand");
  double w = iv.width();
  const Expression& e = f.expr;
  // Weight has integrable log spikes at both endpoints; integrate() guards them.
  auto weighted = [&e, iv, w](double x) {
    double spread = (iv.b - x) * (x - iv.a);
    return eval_value(e, x) * (std::log(w * w / spread) - 1.0);
  };
  double middle = integrate(weighted, iv, defaults::kFiniteTol).value / w;
  return {integral_mean(f, iv), middle, 0.5 * (f(iv.a) + f(iv.b))};
}

BoundPair fejer_upper(const FunctionSpec& f, const FunctionSpec& g, Interval iv) {
  require_convex(f, iv, "integrand");
  const int refined = 2 * defaults::kGrid - 1;
  std::vector<double> gv(static_cast<size_t>(refined));
  double gmax = 0.0;
  for (int r = 0; r < refined; ++r) {
    double x = iv.a + iv.width() * static_cast<double>(r) / static_cast<double>(refined - 1);
    gv[static_cast<size_t>(r)] = g(x);
    gmax = std::max(gmax, std::fabs(gv[static_cast<size_t>(r)]));
  }
  double wtol = defaults::kCertifyTol * (1.0 + gmax);
  for (int r = 0; r < refined; ++r) {
    double x = iv.a + iv.width() * static_cast<double>(r) / static_cast<double>(refined - 1);
    if (gv[static_cast<size_t>(r)] < -wtol)
      throw NegativityError("weight dips below zero on the interval", x);
    double mirrored = gv[static_cast<size_t>(refined - 1 - r)];
    if (std::fabs(gv[static_cast<size_t>(r)] - mirrored) > wtol)
      throw SymmetryError("weight is not symmetric about the midpoint", x);
  }
  const Expression& fe = f.expr;
  const Expression& ge = g.expr;
  auto product = [&fe, &ge](double x) { return eval_value(fe, x) * eval_value(ge, x); };
  double lhs = integrate(product, iv, defaults::kFiniteTol).value;
  double gint = integrate(g, iv, defaults::kFiniteTol).value;
  double rhs = 0.5 * (f(iv.a) + f(iv.b)) * gint;
  return {lhs, rhs};
}

Enclosure composite_hh_depth(const FunctionSpec& f, Interval iv, int depth) {
  if (depth < 0 || depth > 30) throw ParameterError("composite depth must be within [0, 30]");
  require_convex(f, iv, "integrand");
  CompositePair p = composite_pair(f, iv, depth);
  return {p.midpoint, integral_mean(f, iv), p.trapezoid};
}

Enclosure composite_hh(const FunctionSpec& f, Interval iv, double target_gap, int max_depth) {
  if (!(target_gap > 0.0)) throw ParameterError("target gap must be positive");
  if (max_depth < 0 || max_depth > 30) throw ParameterError("max depth must be within [0, 30]");
  require_convex(f, iv, "integrand");
  double mean = integral_mean(f, iv);
  Enclosure best{0.0, mean, 0.0};
  double best_gap = std::numeric_limits<double>::infinity();
  for (int depth = 0; depth <= max_depth; ++depth) {
    CompositePair p = composite_pair(f, iv, depth);
    double gap = p.trapezoid - p.midpoint;
    if (gap < best_gap) {
      best_gap = gap;
      best = {p.midpoint, mean, p.trapezoid};
    }
    if (gap <= target_gap) return best;
  }
  throw TargetNotReachedError("composite refinement stalled above the target gap", best_gap, best);
}

Enclosure series_sandwich(const FunctionSpec& g, SeriesVariant variant) {
  ConvexityCertificate cert = certify(g, Interval(0.0, 12.0), 0);
  if (cert.verdict != Verdict::Convex)
    throw ConvexityError("series term function failed its convexity check on the leading window",
                         cert);
  double g0 = g(0.0);
  if (!std::isfinite(g0)) throw DomainError("series term function is not finite at zero", 0.0);
  const Expression& e = g.expr;
  auto term = [&e](double x) { return eval_value(e, x); };
  // Sums first: they enforce the positive-decreasing hypothesis cheaply,
  // before the half-line integral is attempted.
  double at_integers = sum_series(term, 0.0, defaults::kSeriesTol);
  double at_half =
      variant == SeriesVariant::half_shift ? sum_series(term, 0.5, defaults::kSeriesTol) : 0.0;
  double whole = detail::integrate_from(term, 0.0, 1e-10).value;
  if (variant == SeriesVariant::integer) return {at_integers, whole, g0 + at_integers};
  return {at_half, whole, 0.5 * g0 + at_integers};
}

}  // namespace cvb
