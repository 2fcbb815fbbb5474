#include "cvb/jet.hpp"

#include <cmath>

namespace cvb {

namespace {

// All helpers operate on derivative coefficients c[k] = f^(k) truncated at
// `m`; entries above m stay zero.

Jet jconst(double v, int m) {
  Jet r;
  r.order = m;
  r.c[0] = v;
  return r;
}

Jet jvar(double x, int m) {
  Jet r;
  r.order = m;
  r.c[0] = x;
  if (m >= 1) r.c[1] = 1.0;
  return r;
}

Jet jneg(const Jet& a) {
  Jet r = a;
  for (int k = 0; k <= a.order; ++k) r.c[k] = -a.c[k];
  return r;
}

Jet jadd(const Jet& a, const Jet& b) {
  Jet r = a;
  for (int k = 0; k <= a.order; ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

Jet jsub(const Jet& a, const Jet& b) {
  Jet r = a;
  for (int k = 0; k <= a.order; ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

// Leibniz rule through third order.
Jet jmul(const Jet& a, const Jet& b) {
  int m = a.order;
  Jet r;
  r.order = m;
  r.c[0] = a.c[0] * b.c[0];
  if (m >= 1) r.c[1] = a.c[1] * b.c[0] + a.c[0] * b.c[1];
  if (m >= 2) r.c[2] = a.c[2] * b.c[0] + 2.0 * a.c[1] * b.c[1] + a.c[0] * b.c[2];
  if (m >= 3)
    r.c[3] = a.c[3] * b.c[0] + 3.0 * a.c[2] * b.c[1] + 3.0 * a.c[1] * b.c[2] + a.c[0] * b.c[3];
  return r;
}

// phi(u) by the chain rule; p[k] = phi^(k)(u0).
Jet jcompose(const std::array<double, 4>& p, const Jet& u) {
  int m = u.order;
  Jet r;
  r.order = m;
  double u1 = u.c[1], u2 = u.c[2], u3 = u.c[3];
  r.c[0] = p[0];
  if (m >= 1) r.c[1] = p[1] * u1;
  if (m >= 2) r.c[2] = p[2] * u1 * u1 + p[1] * u2;
  if (m >= 3) r.c[3] = p[3] * u1 * u1 * u1 + 3.0 * p[2] * u1 * u2 + p[1] * u3;
  return r;
}

Jet jrecip(const Jet& b, double x) {
  double v = b.c[0];
  if (v == 0.0) throw DomainError("division by zero", x);
  double iv = 1.0 / v;
  std::array<double, 4> p = {iv, -iv * iv, 2.0 * iv * iv * iv, -6.0 * iv * iv * iv * iv};
  return jcompose(p, b);
}

Jet jdiv(const Jet& a, const Jet& b, double x) { return jmul(a, jrecip(b, x)); }

Jet jpow_int(const Jet& u, long n, double x) {
  int m = u.order;
  if (n == 0) return jconst(1.0, m);
  if (n < 0) return jrecip(jpow_int(u, -n, x), x);
  Jet acc = jconst(1.0, m);
  Jet base = u;
  long k = n;
  while (k > 0) {
    if (k & 1) acc = jmul(acc, base);
    k >>= 1;
    if (k > 0) base = jmul(base, base);
  }
  return acc;
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15; }

bool jet_is_constant(const Jet& j) { return j.c[1] == 0.0 && j.c[2] == 0.0 && j.c[3] == 0.0; }

Jet jexp(const Jet& u) {
  double v = std::exp(u.c[0]);
  return jcompose({v, v, v, v}, u);
}

Jet jln(const Jet& u, double x) {
  double v = u.c[0];
  if (v <= 0.0) throw DomainError("log of a non-positive value", x);
  double iv = 1.0 / v;
  return jcompose({std::log(v), iv, -iv * iv, 2.0 * iv * iv * iv}, u);
}

Jet jsqrt(const Jet& u, double x) {
  double v = u.c[0];
  if (v < 0.0) throw DomainError("sqrt of a negative value", x);
  if (v == 0.0) {
    if (u.order == 0 || jet_is_constant(u)) return jconst(0.0, u.order);
    throw DomainError("sqrt not differentiable at zero", x);
  }
  double s = std::sqrt(v);
  return jcompose({s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v)}, u);
}

Jet jpow_real(const Jet& u, double a, double x) {
  double v = u.c[0];
  if (v <= 0.0) throw DomainError("fractional power of a non-positive base", x);
  double p0 = std::pow(v, a);
  double p1 = a * std::pow(v, a - 1.0);
  double p2 = a * (a - 1.0) * std::pow(v, a - 2.0);
  double p3 = a * (a - 1.0) * (a - 2.0) * std::pow(v, a - 3.0);
  return jcompose({p0, p1, p2, p3}, u);
}

Jet jsin(const Jet& u) {
  double s = std::sin(u.c[0]), c = std::cos(u.c[0]);
  return jcompose({s, c, -s, -c}, u);
}

Jet jcos(const Jet& u) {
  double s = std::sin(u.c[0]), c = std::cos(u.c[0]);
  return jcompose({c, -s, -c, s}, u);
}

Jet eval_node(const Node& n, double x, int m) {
  switch (n.kind) {
    case NodeKind::Number: return jconst(n.number, m);
    case NodeKind::Variable: return jvar(x, m);
    case NodeKind::ConstE: return jconst(M_E, m);
    case NodeKind::ConstPi: return jconst(M_PI, m);
    case NodeKind::Neg: return jneg(eval_node(*n.lhs, x, m));
    case NodeKind::Add: return jadd(eval_node(*n.lhs, x, m), eval_node(*n.rhs, x, m));
    case NodeKind::Sub: return jsub(eval_node(*n.lhs, x, m), eval_node(*n.rhs, x, m));
    case NodeKind::Mul: return jmul(eval_node(*n.lhs, x, m), eval_node(*n.rhs, x, m));
    case NodeKind::Div: return jdiv(eval_node(*n.lhs, x, m), eval_node(*n.rhs, x, m), x);
    case NodeKind::Pow: {
      Jet base = eval_node(*n.lhs, x, m);
      Jet ex = eval_node(*n.rhs, x, m);
      if (jet_is_constant(ex)) {
        if (is_integer(ex.c[0])) {
          if (base.c[0] == 0.0 && ex.c[0] < 0.0)
            throw DomainError("zero raised to a negative power", x);
          return jpow_int(base, static_cast<long>(ex.c[0]), x);
        }
        return jpow_real(base, ex.c[0], x);
      }
      // variable exponent: u^v = exp(v * ln u), base must be positive
      return jexp(jmul(ex, jln(base, x)));
    }
    case NodeKind::Call: {
      Jet u = eval_node(*n.lhs, x, m);
      switch (n.func) {
        case Func::Exp: return jexp(u);
        case Func::Ln: return jln(u, x);
        case Func::Sqrt: return jsqrt(u, x);
        case Func::Sin: return jsin(u);
        case Func::Cos: return jcos(u);
      }
      return jconst(0.0, m);
    }
  }
  return jconst(0.0, m);
}

}  // namespace

Jet eval_jet(const Expression& e, double x, int order) {
  if (order < 0 || order > 3) throw ParameterError("jet order must be in 0..3");
  return eval_node(e.root(), x, order);
}

}  // namespace cvb
