#include "cvb/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cvb/defaults.hpp"
#include "cvb/jet.hpp"
#include "cvb/quadrature.hpp"

namespace cvb {

namespace {

// 7-point Gauss-Legendre rule, exact through degree 13.
constexpr double kGlNode[4] = {0.0, 0.4058451513773971669066, 0.7415311855993944398639,
                              0.9491079123427585245262};
constexpr double kGlWeight[4] = {0.4179591836734693877551, 0.3818300505051189449504,
                                 0.2797053914892766679015, 0.1294849661688696932706};

double gl7(const RealFn& f, double lo, double hi) {
  double c = 0.5 * (lo + hi);
  double h = 0.5 * (hi - lo);
  double acc = kGlWeight[0] * f(c);
  for (int i = 1; i < 4; ++i)
    acc += kGlWeight[i] * (f(c - h * kGlNode[i]) + f(c + h * kGlNode[i]));
  return acc * h;
}

// Running integral F(x) of a smooth decaying integrand, cached on a knot
// ladder that is uniform on [0,1] and geometric (32 cells per octave) beyond,
// so a lookup costs one partial-cell rule application.
class CumulativePrefix {
public:
  explicit CumulativePrefix(RealFn f) : f_(std::move(f)), knots_{0.0}, prefix_{0.0} {}

  double operator()(double x) {
    if (x <= 0.0) return 0.0;
    extend_to(x);
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    size_t idx = static_cast<size_t>(it - knots_.begin()) - 1;
    return prefix_[idx] + gl7(f_, knots_[idx], x);
  }

private:
  void extend_to(double x) {
    while (knots_.back() < x) {
      size_t i = knots_.size();
      double next = i <= 32 ? static_cast<double>(i) / 32.0
                            : std::exp2(static_cast<double>(i - 32) / 32.0);
      prefix_.push_back(prefix_.back() + gl7(f_, knots_.back(), next));
      knots_.push_back(next);
    }
  }

  RealFn f_;
  std::vector<double> knots_;
  std::vector<double> prefix_;
};

// Absolute tolerance for a half-line norm integral whose magnitude is not
// known upfront: loose pass first, then a pass scaled to what was found.
double norm_integral(const RealFn& g) {
  double rough = detail::integrate_from(g, 0.0, 1e-4).value;
  double tol = 1e-10 * (1.0 + std::fabs(rough));
  return detail::integrate_from(g, 0.0, tol).value;
}

void require_nonneg(const FunctionSpec& u, Interval iv, const char* role) {
  const int n = defaults::kGrid;
  std::vector<double> v(static_cast<size_t>(n));
  double mag = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = iv.a + iv.width() * static_cast<double>(i) / static_cast<double>(n - 1);
    v[static_cast<size_t>(i)] = u(x);
    mag = std::max(mag, std::fabs(v[static_cast<size_t>(i)]));
  }
  double tol = defaults::kCertifyTol * (1.0 + mag);
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<size_t>(i)] < -tol) {
      double x = iv.a + iv.width() * static_cast<double>(i) / static_cast<double>(n - 1);
      throw NegativityError(std::string(role) + " dips below zero on the interval", x);
    }
  }
}

void require_convex_factor(const FunctionSpec& u, Interval iv, const char* role) {
  ConvexityCertificate cert = certify(u, iv, 0);
  if (!cert.convex_ok())
    throw ConvexityError(std::string(role) + " failed its convexity check on the interval", cert);
}

double product_integral(std::span<const FunctionSpec> us, Interval iv) {
  auto prod = [&us](double x) {
    double acc = 1.0;
    for (const FunctionSpec& u : us) acc *= eval_value(u.expr, x);
    return acc;
  };
  return integrate(prod, iv, defaults::kFiniteTol).value;
}

}  // namespace

Enclosure hardy_ratio(const FunctionSpec& f, HardyParams prm) {
  if (!(prm.p > 1.0)) throw ParameterError("norm exponent p must exceed 1");
  if (!(prm.alpha * prm.p > 1.0)) throw ParameterError("alpha*p must exceed 1");

  // Hypothesis checks are sampled on a leading window: nonnegative,
  // non-increasing, not identically zero.
  double f0 = f(0.0);
  if (!(f0 > 0.0)) throw PreconditionError("function must be positive at zero");
  const Interval window(0.0, 8.0);
  require_nonneg(f, window, "function");
  {
    const int n = defaults::kGrid;
    double dmag = 0.0;
    std::vector<double> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double x = window.width() * static_cast<double>(i) / static_cast<double>(n - 1);
      d[static_cast<size_t>(i)] = f.jet(x, 1).d1();
      dmag = std::max(dmag, std::fabs(d[static_cast<size_t>(i)]));
    }
    double dtol = 1e-9 * (1.0 + dmag);
    for (int i = 0; i < n; ++i)
      if (d[static_cast<size_t>(i)] > dtol)
        throw PreconditionError("function must be non-increasing on the half line");
  }

  // The quotient is scale invariant, so normalize f(0) to 1 before raising
  // anything to the p-th power.
  const Expression& e = f.expr;
  auto scaled = [&e, f0](double x) { return eval_value(e, x) / f0; };
  CumulativePrefix prefix(scaled);
  const double alpha = prm.alpha;
  const double p = prm.p;
  auto upper_integrand = [&prefix, alpha, p](double x) {
    if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    double fx = prefix(x);
    if (fx <= 0.0) return 0.0;
    return std::exp(p * (std::log(fx) - alpha * std::log(x)));
  };
  auto lower_integrand = [&scaled, alpha, p](double x) {
    if (x <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    double fx = scaled(x);
    if (fx <= 0.0) return 0.0;
    return std::exp(p * (std::log(fx) + (1.0 - alpha) * std::log(x)));
  };
  double upper_norm, lower_norm;
  try {
    upper_norm = std::pow(norm_integral(upper_integrand), 1.0 / p);
    lower_norm = std::pow(norm_integral(lower_integrand), 1.0 / p);
  } catch (const QuadratureError& err) {
    throw PreconditionError(std::string("norm integral did not converge (") + err.what() +
                            "); parameters sit too close to the divergence boundary");
  }
  if (!(lower_norm > 0.0)) throw PreconditionError("weighted norm of the function vanishes");

  double lo = std::exp2(1.0 - alpha + 1.0 / p);
  double hi = 1.0 / (alpha - 1.0 / p);
  return {lo, upper_norm / lower_norm, hi};
}

BoundPair holder_product_check(std::span<const FunctionSpec> us, Interval iv) {
  if (us.size() < 2) throw ParameterError("product comparison needs at least two factors");
  for (const FunctionSpec& u : us) {
    require_nonneg(u, iv, "factor");
    require_convex_factor(u, iv, "factor");
  }
  double n = static_cast<double>(us.size());
  double lhs = std::pow(product_integral(us, iv), n);
  double rhs = 1.0;
  for (const FunctionSpec& u : us) {
    const Expression& e = u.expr;
    auto powed = [&e, n](double x) { return std::pow(eval_value(e, x), n); };
    rhs *= integrate(powed, iv, defaults::kFiniteTol).value;
  }
  return {lhs, rhs};
}

ConvexityCertificate power_convexity(const FunctionSpec& u, Interval iv, long n) {
  if (n < 1) throw ParameterError("power must be a positive integer");
  require_nonneg(u, iv, "base");
  require_convex_factor(u, iv, "base");
  FunctionSpec powered{make_pow(u.expr, n), iv, u.provenance};
  return certify(powered, iv, 0);
}

BoundPair product_bound(std::span<const FunctionSpec> us, Interval iv) {
  if (us.size() < 2) throw ParameterError("product bound needs at least two factors");
  for (const FunctionSpec& u : us) {
    require_nonneg(u, iv, "factor");
    require_convex_factor(u, iv, "factor");
  }
  double n = static_cast<double>(us.size());
  double lhs = product_integral(us, iv) / iv.width();
  double rhs = 0.5;
  for (const FunctionSpec& u : us)
    rhs *= std::pow(std::pow(u(iv.a), n) + std::pow(u(iv.b), n), 1.0 / n);
  return {lhs, rhs};
}

BoundPair holder_pair_bound(const FunctionSpec& u, const FunctionSpec& v, Interval iv, double p,
                            double q) {
  if (!(p > 1.0) || !(q > 1.0)) throw ParameterError("conjugate exponents must both exceed 1");
  if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-9)
    throw ParameterError("exponents must satisfy 1/p + 1/q = 1");
  require_nonneg(u, iv, "first factor");
  require_convex_factor(u, iv, "first factor");
  require_nonneg(v, iv, "second factor");
  require_convex_factor(v, iv, "second factor");
  const FunctionSpec pair[2] = {u, v};
  double lhs = product_integral(pair, iv) / iv.width();
  double rhs = 0.5 * std::pow(std::pow(u(iv.a), p) + std::pow(u(iv.b), p), 1.0 / p) *
               std::pow(std::pow(v(iv.a), q) + std::pow(v(iv.b), q), 1.0 / q);
  return {lhs, rhs};
}

}  // namespace cvb
