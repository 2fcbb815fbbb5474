#include "cvb/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cvb/jet.hpp"

namespace cvb {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Convex: return "Convex";
    case Verdict::Concave: return "Concave";
    case Verdict::Affine: return "Affine";
    case Verdict::Neither: return "Neither";
  }
  return "Neither";
}

ConvexityCertificate certify(const FunctionSpec& f, Interval iv, int level, int grid, double tol) {
  if (level < 0 || level > 2) throw ParameterError("certify level must be 0, 1 or 2");
  if (grid < 16) throw ParameterError("certify grid must hold at least 16 points");
  if (!(tol > 0.0)) throw ParameterError("certify tolerance must be positive");

  // Refined grid interleaves every coarse midpoint so the pair test below can
  // read exact samples instead of interpolating.
  const int refined = 2 * grid - 1;
  const int order = std::min(level + 2, 3);
  std::vector<double> g(refined);
  std::vector<double> d;  // (level+2)-th derivative, available for level <= 1
  const bool has_gate = level <= 1;
  if (has_gate) d.resize(refined);

  double gmax = 0.0;
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = -std::numeric_limits<double>::infinity();
  double dmag = 0.0;
  for (int r = 0; r < refined; ++r) {
    double x = iv.a + (iv.b - iv.a) * static_cast<double>(r) / static_cast<double>(refined - 1);
    Jet j = eval_jet(f.expr, x, order);
    g[r] = j.c[static_cast<size_t>(level)];
    if (!std::isfinite(g[r])) throw DomainError("function value is not finite on the interval", x);
    gmax = std::max(gmax, std::fabs(g[r]));
    if (has_gate) {
      d[static_cast<size_t>(r)] = j.c[static_cast<size_t>(level + 2)];
      if (!std::isfinite(d[static_cast<size_t>(r)]))
        throw DomainError("derivative is not finite on the interval", x);
      dmin = std::min(dmin, d[static_cast<size_t>(r)]);
      dmax = std::max(dmax, d[static_cast<size_t>(r)]);
      dmag = std::max(dmag, std::fabs(d[static_cast<size_t>(r)]));
    }
  }

  double worst_convex = -std::numeric_limits<double>::infinity();
  double worst_concave = -std::numeric_limits<double>::infinity();
  int cx_i = 0, cx_j = 0, cc_i = 0, cc_j = 0;
  for (int i = 0; i < grid; ++i) {
    for (int j = i + 1; j < grid; ++j) {
      // defect > 0 breaks convexity, defect < 0 breaks concavity
      double defect = g[static_cast<size_t>(i + j)] -
                      0.5 * (g[static_cast<size_t>(2 * i)] + g[static_cast<size_t>(2 * j)]);
      if (defect > worst_convex) {
        worst_convex = defect;
        cx_i = i;
        cx_j = j;
      }
      if (-defect > worst_concave) {
        worst_concave = -defect;
        cc_i = i;
        cc_j = j;
      }
    }
  }

  const double tol_eff = tol * (1.0 + gmax);
  const double dtol = 1e-6 * (1.0 + dmag);
  const bool midpoint_convex = worst_convex <= tol_eff;
  const bool midpoint_concave = worst_concave <= tol_eff;
  const bool gate_convex = !has_gate || dmin >= -dtol;
  const bool gate_concave = !has_gate || dmax <= dtol;

  ConvexityCertificate cert;
  cert.level = level;
  cert.grid_size = grid;
  cert.tolerance = tol_eff;
  if (midpoint_convex && midpoint_concave && gate_convex && gate_concave) {
    cert.verdict = Verdict::Affine;
    cert.max_violation = std::max(worst_convex, worst_concave);
  } else if (midpoint_convex && gate_convex) {
    cert.verdict = Verdict::Convex;
    cert.max_violation = worst_convex;
  } else if (midpoint_concave && gate_concave) {
    cert.verdict = Verdict::Concave;
    cert.max_violation = worst_concave;
  } else {
    cert.verdict = Verdict::Neither;
    double step = (iv.b - iv.a) / static_cast<double>(grid - 1);
    int wi = cx_i, wj = cx_j;
    cert.max_violation = std::max(worst_convex, worst_concave);
    if (worst_concave > worst_convex) {
      wi = cc_i;
      wj = cc_j;
    }
    cert.witness_x = iv.a + step * wi;
    cert.witness_y = iv.a + step * wj;
  }
  return cert;
}

double find_split(const FunctionSpec& f, Interval iv, int grid, double tol) {
  if (grid < 16) throw ParameterError("split grid must hold at least 16 points");
  if (!(tol > 0.0)) throw ParameterError("split tolerance must be positive");

  std::vector<double> xs(static_cast<size_t>(grid));
  std::vector<double> t3(static_cast<size_t>(grid));
  double tmag = 0.0;
  for (int i = 0; i < grid; ++i) {
    double x = iv.a + (iv.b - iv.a) * static_cast<double>(i) / static_cast<double>(grid - 1);
    xs[static_cast<size_t>(i)] = x;
    t3[static_cast<size_t>(i)] = eval_jet(f.expr, x, 3).c[3];
    if (!std::isfinite(t3[static_cast<size_t>(i)]))
      throw DomainError("third derivative is not finite on the interval", x);
    tmag = std::max(tmag, std::fabs(t3[static_cast<size_t>(i)]));
  }
  const double s = tol * (1.0 + tmag);

  int last_neg = -1, first_pos = grid;
  for (int i = 0; i < grid; ++i) {
    if (t3[static_cast<size_t>(i)] < -s) last_neg = i;
    if (t3[static_cast<size_t>(i)] > s && first_pos == grid) first_pos = i;
  }

  double c;
  if (last_neg < 0) {
    c = iv.a;  // never dips negative: the concave stretch is empty
  } else if (first_pos == grid) {
    c = iv.b;  // never turns positive: the convex stretch is empty
  } else if (last_neg < first_pos) {
    double lo = xs[static_cast<size_t>(last_neg)];
    double hi = xs[static_cast<size_t>(first_pos)];
    const Expression& e = f.expr;
    for (int it = 0; it < 80 && hi - lo > (iv.b - iv.a) * 1e-14; ++it) {
      double mid = 0.5 * (lo + hi);
      if (eval_jet(e, mid, 3).c[3] < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    c = 0.5 * (lo + hi);
  } else {
    throw NoSuchSplitError("third derivative changes sign more than once");
  }

  const double skip_width = iv.width() * 1e-6;
  if (c - iv.a >= skip_width) {
    ConvexityCertificate left = certify(f, Interval(iv.a, c), 1, grid, tol);
    if (!left.concave_ok())
      throw NoSuchSplitError("derivative is not concave left of the candidate split");
  }
  if (iv.b - c >= skip_width) {
    ConvexityCertificate right = certify(f, Interval(c, iv.b), 1, grid, tol);
    if (!right.convex_ok())
      throw NoSuchSplitError("derivative is not convex right of the candidate split");
  }
  return c;
}

}  // namespace cvb
