#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "selman/error.hpp"

namespace selman {

/// Scalar expression over variables x1..xk (the single-variable alias `t`
/// parses as x1). Immutable tree with value semantics; shared subtrees are
/// never mutated.
///
/// Node kinds: constant, variable, add, sub, mul, div, pow (integer
/// exponent), sin, cos, exp, log, abs. A hidden `sign` kind appears only in
/// derivatives of abs; evaluating it at 0 raises NonDifferentiable.
class Expr {
 public:
  enum class Kind {
    Const, Var, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Log, Abs, Sign
  };

  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double v);
  static Expr var(int index);  // 0-based
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, int exponent);
  static Expr sin(Expr a);
  static Expr cos(Expr a);
  static Expr exp(Expr a);
  static Expr log(Expr a);
  static Expr abs(Expr a);
  static Expr sign(Expr a);

  Kind kind() const;
  double const_value() const;   // Kind::Const only
  int var_index() const;        // Kind::Var only
  int exponent() const;         // Kind::Pow only
  const Expr& child(int i) const;
  int arity() const;

  /// Evaluates at x (x[i] bound to x_{i+1}). Raises NonFinite when the
  /// result or an intermediate is not finite, NonDifferentiable for sign(0).
  double eval(std::span<const double> x) const;

  /// Symbolic partial derivative with respect to variable `index`.
  Expr derivative(int index) const;

  /// Substitutes args[i] for variable i. Variables past args.size() raise
  /// InvalidArgument.
  Expr substitute(const std::vector<Expr>& args) const;

  /// Largest variable index used, or -1 for a closed expression.
  int max_var() const;
  bool contains_abs() const;

  /// Canonical prefix s-expression, e.g. "(mul x1 (pow x2 3))".
  std::string to_string() const;

  /// Parses the grammar documented in the README. Positions in error
  /// messages are byte offsets into `text`.
  static Expr parse(const std::string& text);

  bool same_tree(const Expr& other) const;  // structural equality

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace selman
