#include "cvb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cvb {

namespace {

constexpr int kMaxDepth = 48;
constexpr long kMaxLeaves = 400000;
// Enough rounds for power singularities x^beta down to beta ~ -0.7 at the
// default tolerances; each round adds two cheap strip integrations.
constexpr int kMaxGuardHalvings = 140;
constexpr int kMaxPanels = 240;
constexpr long kMaxSeriesTerms = 2000000;

struct SimpsonCtx {
  const RealFn& f;
  long leaves = 0;
  double err = 0.0;

  double sample(double x) {
    double v = f(x);
    if (!std::isfinite(v)) throw QuadratureError("non-finite sample in quadrature");
    return v;
  }
};

double simpson_rec(SimpsonCtx& ctx, double a, double fa, double m, double fm, double b, double fb,
                   double whole, double tol, int depth) {
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = ctx.sample(lm);
  double frm = ctx.sample(rm);
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  // Interval too thin to split further: accept what we have.
  bool exhausted = depth >= kMaxDepth || !(a < lm && lm < m && m < rm && rm < b);
  if (std::fabs(delta) <= 15.0 * tol || exhausted) {
    if (exhausted && std::fabs(delta) > 15.0 * tol && ctx.leaves >= kMaxLeaves)
      throw QuadratureError("quadrature failed to converge");
    ++ctx.leaves;
    ctx.err += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  if (ctx.leaves >= kMaxLeaves) throw QuadratureError("quadrature failed to converge");
  return simpson_rec(ctx, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
         simpson_rec(ctx, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
}

// Core rule on an interval with evaluable endpoints.
QuadratureResult simpson_adaptive(const RealFn& f, double a, double b, double tol) {
  SimpsonCtx ctx{f};
  double fa = ctx.sample(a);
  double fb = ctx.sample(b);
  double m = 0.5 * (a + b);
  double fm = ctx.sample(m);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double v = simpson_rec(ctx, a, fa, m, fm, b, fb, whole, tol, 0);
  return {v, ctx.err, ctx.leaves};
}

bool evaluable(const RealFn& f, double x) {
  try {
    return std::isfinite(f(x));
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

QuadratureResult integrate(const RealFn& f, Interval iv, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  bool left_ok = evaluable(f, iv.a);
  bool right_ok = evaluable(f, iv.b);
  if (left_ok && right_ok) return simpson_adaptive(f, iv.a, iv.b, tol);

  // Integrable endpoint singularity: shrink guard offsets, extrapolating the
  // cut-off tails from the geometric decay of successive strip contributions.
  double w = iv.width();
  double dl = left_ok ? 0.0 : w / 64.0;
  double dr = right_ok ? 0.0 : w / 64.0;
  QuadratureResult res = simpson_adaptive(f, iv.a + dl, iv.b - dr, tol / 4.0);
  double prev_diff = 0.0;
  for (int k = 0; k < kMaxGuardHalvings; ++k) {
    // Guard offsets are absolute, so at an endpoint away from zero they
    // bottom out near ulp(endpoint); refusing beats sampling the singularity.
    if ((!left_ok && iv.a + dl / 2.0 == iv.a) || (!right_ok && iv.b - dr / 2.0 == iv.b))
      throw QuadratureError("endpoint singularity too strong to integrate");
    double diff = 0.0;
    if (!left_ok) {
      QuadratureResult strip = simpson_adaptive(f, iv.a + dl / 2.0, iv.a + dl, tol / 64.0);
      diff += strip.value;
      res.error_estimate += strip.error_estimate;
      res.subdivisions += strip.subdivisions;
      dl /= 2.0;
    }
    if (!right_ok) {
      QuadratureResult strip = simpson_adaptive(f, iv.b - dr, iv.b - dr / 2.0, tol / 64.0);
      diff += strip.value;
      res.error_estimate += strip.error_estimate;
      res.subdivisions += strip.subdivisions;
      dr /= 2.0;
    }
    res.value += diff;
    if (k >= 1 && std::fabs(diff) < tol / 4.0) {
      double r = 0.5;
      if (prev_diff != 0.0 && diff * prev_diff > 0.0) {
        r = std::fabs(diff / prev_diff);
        r = std::clamp(r, 0.0, 0.9);
      }
      res.value += diff * r / (1.0 - r);
      res.error_estimate += std::fabs(diff);
      return res;
    }
    prev_diff = diff;
  }
  throw QuadratureError("endpoint singularity too strong to integrate");
}

QuadratureResult integrate(const FunctionSpec& f, Interval iv, double tol) {
  const Expression& e = f.expr;
  return integrate([&e](double x) { return eval_value(e, x); }, iv, tol);
}

namespace detail {

QuadratureResult integrate_from(const RealFn& f, double lo, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  QuadratureResult total;
  double left = lo;
  double width = 1.0;
  double prev_panel = 0.0;
  int flat_streak = 0;
  for (int k = 0; k < kMaxPanels; ++k) {
    QuadratureResult panel = integrate(f, Interval(left, left + width), tol / 64.0);
    total.value += panel.value;
    total.error_estimate += panel.error_estimate;
    total.subdivisions += panel.subdivisions;
    double mag = std::fabs(panel.value);
    if (k >= 1) {
      // Growing panels witness divergence only once width >= max(lo, 1):
      // before that the doubling still ramps up relative to lo, and even a
      // convergent power-law tail grows proportionally to the width. Six
      // non-decaying panels in a row are required because a slowly
      // saturating prefactor (think (1-e^{-kx})^p against a power tail) can
      // legitimately grow panels for a few doublings before decay sets in.
      if (width >= std::max(lo, 1.0)) {
        if (mag >= std::fabs(prev_panel) && mag > tol / 4.0) {
          if (++flat_streak >= 6) throw QuadratureError("integral over the half line diverges");
        } else {
          flat_streak = 0;
        }
      }
      double r = 0.5;
      if (prev_panel != 0.0 && panel.value * prev_panel > 0.0)
        r = std::clamp(mag / std::fabs(prev_panel), 0.05, 0.95);
      double tail = mag * r / (1.0 - r);
      if (k >= 2 && tail < tol / 2.0) {
        total.value += panel.value * r / (1.0 - r);
        total.error_estimate += tail;
        return total;
      }
    }
    prev_panel = panel.value;
    left += width;
    width = left - lo;  // horizon doubles: lo+1, lo+2, lo+4, lo+8, ...
    if (width < 1.0) width = 1.0;
  }
  throw QuadratureError("half-line integral failed to converge within the horizon budget");
}

}  // namespace detail

QuadratureResult integrate_half_line(const RealFn& f, double tol) {
  return detail::integrate_from(f, 0.0, tol);
}

QuadratureResult integrate_half_line(const FunctionSpec& f, double tol) {
  const Expression& e = f.expr;
  return detail::integrate_from([&e](double x) { return eval_value(e, x); }, 0.0, tol);
}

double sum_series(const RealFn& g, double offset, double tol) {
  if (offset != 0.0 && offset != 0.5) throw ParameterError("series offset must be 0 or 1/2");
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (long k = 1; k <= kMaxSeriesTerms; ++k) {
    double x = static_cast<double>(k) - offset;
    double t = g(x);
    if (!std::isfinite(t)) throw QuadratureError("non-finite series term");
    if (t < 0.0) throw PreconditionError("series terms must stay positive");
    if (t > prev * (1.0 + 1e-12)) throw PreconditionError("series terms must be decreasing");
    sum += t;
    if (t == 0.0) return sum;  // decreasing and nonnegative: every later term is zero
    if (t < tol) {
      // Tail of a decreasing positive sequence is bracketed by integrals of g
      // starting at x and at x+1; take the midpoint (error <= g(x)/2).
      QuadratureResult from_x = detail::integrate_from(g, x, tol / 4.0);
      QuadratureResult first_cell = integrate(g, Interval(x, x + 1.0), tol / 4.0);
      sum += from_x.value - 0.5 * first_cell.value;
      return sum;
    }
    prev = t;
  }
  throw QuadratureError("series tail failed to close within the term budget");
}

double sum_series(const FunctionSpec& g, double offset, double tol) {
  const Expression& e = g.expr;
  return sum_series([&e](double x) { return eval_value(e, x); }, offset, tol);
}

}  // namespace cvb
