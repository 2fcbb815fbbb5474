#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cvb/errors.hpp"

namespace cvb {

enum class NodeKind {
  Number,    // literal
  Variable,  // x
  ConstE,    // e
  ConstPi,   // pi
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Call,
};

enum class Func { Exp, Ln, Sqrt, Sin, Cos };

struct Node;
using NodeRef = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  double number = 0.0;    // NodeKind::Number
  Func func = Func::Exp;  // NodeKind::Call
  NodeRef lhs;            // unary operand / left child
  NodeRef rhs;            // right child of binary operators
};

/// Immutable syntax tree for a univariate real function of `x`.
/// Shareable across threads; `source_text()` preserves the text it was
/// parsed from (or a synthesized equivalent for built expressions).
class Expression {
public:
  Expression(NodeRef root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  const Node& root() const { return *root_; }
  const NodeRef& root_ref() const { return root_; }
  const std::string& source_text() const { return source_; }

private:
  NodeRef root_;
  std::string source_;
};

/// Parse `source` with the grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | atom ("^" factor)?
///   atom   := number | "x" | "e" | "pi" | ident "(" expr ")" | "(" expr ")"
/// Known idents: exp, ln, sqrt, sin, cos. "^" is right-associative and binds
/// tighter than unary minus, which binds tighter than "*" and "/".
/// Throws ParseError (with byte offset) on syntax errors or unknown names.
Expression parse(std::string_view source);

/// Canonical text for an expression; parsing it back yields a structurally
/// equal tree. Literals are printed with enough digits to round-trip.
std::string serialize(const Expression& e);

/// Structural tree equality (literal values compared exactly).
bool structurally_equal(const Expression& a, const Expression& b);

/// Evaluate at a point. Throws DomainError when a subexpression leaves its
/// domain (non-positive log, negative sqrt, division by zero, fractional
/// power of a non-positive base).
double eval_value(const Expression& e, double x);

/// base^n with a synthesized source text; used to state power hypotheses.
Expression make_pow(const Expression& base, long n);

}  // namespace cvb
