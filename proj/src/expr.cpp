#include "cvb/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace cvb {

namespace {

NodeRef mk(NodeKind k, NodeRef a = nullptr, NodeRef b = nullptr) {
  Node n;
  n.kind = k;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return std::make_shared<const Node>(std::move(n));
}

NodeRef mk_number(double v) {
  Node n;
  n.kind = NodeKind::Number;
  n.number = v;
  return std::make_shared<const Node>(std::move(n));
}

NodeRef mk_unary(NodeKind k, NodeRef a) { return mk(k, std::move(a)); }

NodeRef mk_binary(NodeKind k, NodeRef a, NodeRef b) { return mk(k, std::move(a), std::move(b)); }

NodeRef mk_call(Func f, NodeRef a) {
  Node n;
  n.kind = NodeKind::Call;
  n.func = f;
  n.lhs = std::move(a);
  return std::make_shared<const Node>(std::move(n));
}

// ============================================================================
// Parser
// ============================================================================

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodeRef run() {
    NodeRef e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodeRef expr() {
    NodeRef lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = mk_binary(NodeKind::Add, lhs, term());
      else if (eat('-'))
        lhs = mk_binary(NodeKind::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodeRef term() {
    NodeRef lhs = factor();
    for (;;) {
      if (eat('*'))
        lhs = mk_binary(NodeKind::Mul, lhs, factor());
      else if (eat('/'))
        lhs = mk_binary(NodeKind::Div, lhs, factor());
      else
        return lhs;
    }
  }

  // "^" binds tighter than unary minus: -x^2 is -(x^2), 2^-x is 2^(-x).
  NodeRef factor() {
    if (eat('-')) return mk_unary(NodeKind::Neg, factor());
    NodeRef base = atom();
    if (eat('^')) return mk_binary(NodeKind::Pow, base, factor());
    return base;
  }

  NodeRef atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodeRef e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodeRef number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '.')) {
      pos_ = start;
      fail("malformed number");
    }
    // Exponent suffix only when it is actually followed by digits, so that
    // "2*e" keeps "e" as the named constant.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;
      }
    }
    std::string text(src_.substr(start, pos_ - start));
    double v = std::strtod(text.c_str(), nullptr);
    if (!std::isfinite(v)) {
      pos_ = start;
      fail("number out of range");
    }
    return mk_number(v);
  }

  NodeRef ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    if (peek() == '(') {
      Func f;
      if (name == "exp")
        f = Func::Exp;
      else if (name == "ln")
        f = Func::Ln;
      else if (name == "sqrt")
        f = Func::Sqrt;
      else if (name == "sin")
        f = Func::Sin;
      else if (name == "cos")
        f = Func::Cos;
      else {
        pos_ = start;
        fail("unknown function '" + name + "'");
      }
      eat('(');
      NodeRef arg = expr();
      if (!eat(')')) fail("expected ')'");
      return mk_call(f, arg);
    }
    if (name == "x") return mk(NodeKind::Variable);
    if (name == "e") return mk(NodeKind::ConstE);
    if (name == "pi") return mk(NodeKind::ConstPi);
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }
};

// ============================================================================
// Serializer
// ============================================================================

const char* func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sqrt: return "sqrt";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
  }
  return "?";
}

std::string number_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Precedence levels used for minimal parenthesization.
// 1: + -   2: * /   3: unary -   4: ^   9: atoms
int prec(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    case NodeKind::Number: return n.number < 0 ? 3 : 9;
    default: return 9;
  }
}

void emit(const Node& n, int min_prec, std::string& out) {
  bool wrap = prec(n) < min_prec;
  if (wrap) out += '(';
  switch (n.kind) {
    case NodeKind::Number: out += number_text(n.number); break;
    case NodeKind::Variable: out += 'x'; break;
    case NodeKind::ConstE: out += 'e'; break;
    case NodeKind::ConstPi: out += "pi"; break;
    case NodeKind::Neg:
      out += '-';
      emit(*n.lhs, 3, out);
      break;
    case NodeKind::Add:
      emit(*n.lhs, 1, out);
      out += " + ";
      emit(*n.rhs, 2, out);
      break;
    case NodeKind::Sub:
      emit(*n.lhs, 1, out);
      out += " - ";
      emit(*n.rhs, 2, out);
      break;
    case NodeKind::Mul:
      emit(*n.lhs, 2, out);
      out += '*';
      emit(*n.rhs, 3, out);
      break;
    case NodeKind::Div:
      emit(*n.lhs, 2, out);
      out += '/';
      emit(*n.rhs, 3, out);
      break;
    case NodeKind::Pow:
      emit(*n.lhs, 9, out);  // base must be an atom
      out += '^';
      emit(*n.rhs, 3, out);  // right-assoc; unary minus legal here
      break;
    case NodeKind::Call:
      out += func_name(n.func);
      out += '(';
      emit(*n.lhs, 0, out);
      out += ')';
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Expression parse(std::string_view source) {
  Parser p(source);
  return Expression(p.run(), std::string(source));
}

std::string serialize(const Expression& e) {
  std::string out;
  emit(e.root(), 0, out);
  return out;
}

bool structurally_equal(const Expression& a, const Expression& b) {
  struct Cmp {
    static bool eq(const Node& x, const Node& y) {
      if (x.kind != y.kind) return false;
      switch (x.kind) {
        case NodeKind::Number: return x.number == y.number;
        case NodeKind::Variable:
        case NodeKind::ConstE:
        case NodeKind::ConstPi: return true;
        case NodeKind::Neg: return eq(*x.lhs, *y.lhs);
        case NodeKind::Call: return x.func == y.func && eq(*x.lhs, *y.lhs);
        default: return eq(*x.lhs, *y.lhs) && eq(*x.rhs, *y.rhs);
      }
    }
  };
  return Cmp::eq(a.root(), b.root());
}

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15; }

double eval_node(const Node& n, double x) {
  switch (n.kind) {
    case NodeKind::Number: return n.number;
    case NodeKind::Variable: return x;
    case NodeKind::ConstE: return M_E;
    case NodeKind::ConstPi: return M_PI;
    case NodeKind::Neg: return -eval_node(*n.lhs, x);
    case NodeKind::Add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case NodeKind::Sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case NodeKind::Mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case NodeKind::Div: {
      double num = eval_node(*n.lhs, x);
      double den = eval_node(*n.rhs, x);
      if (den == 0.0) throw DomainError("division by zero", x);
      return num / den;
    }
    case NodeKind::Pow: {
      double base = eval_node(*n.lhs, x);
      double ex = eval_node(*n.rhs, x);
      if (is_integer(ex)) {
        if (base == 0.0 && ex < 0.0) throw DomainError("zero raised to a negative power", x);
        return std::pow(base, ex);
      }
      if (base <= 0.0) throw DomainError("fractional power of a non-positive base", x);
      return std::pow(base, ex);
    }
    case NodeKind::Call: {
      double a = eval_node(*n.lhs, x);
      switch (n.func) {
        case Func::Exp: return std::exp(a);
        case Func::Ln:
          if (a <= 0.0) throw DomainError("log of a non-positive value", x);
          return std::log(a);
        case Func::Sqrt:
          if (a < 0.0) throw DomainError("sqrt of a negative value", x);
          return std::sqrt(a);
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
      }
      return 0.0;
    }
  }
  return 0.0;
}

}  // namespace

double eval_value(const Expression& e, double x) { return eval_node(e.root(), x); }

Expression make_pow(const Expression& base, long n) {
  NodeRef root = mk_binary(NodeKind::Pow, base.root_ref(), mk_number(static_cast<double>(n)));
  std::string src = "(" + serialize(base) + ")^" + std::to_string(n);
  return Expression(std::move(root), std::move(src));
}

}  // namespace cvb
