#include "selman/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "selman/format.hpp"

namespace selman {

struct Expr::Node {
  Kind kind;
  double value = 0.0;  // Const
  int index = 0;       // Var: variable index; Pow: exponent
  std::vector<Expr> kids;
};

namespace {

Expr make(Expr::Kind kind, std::vector<Expr> kids, double value = 0.0,
          int index = 0) {
  struct Access : Expr {
    static Expr build(std::shared_ptr<const Node> n) { return Expr(std::move(n)); }
  };
  auto n = std::make_shared<Expr::Node>();
  n->kind = kind;
  n->value = value;
  n->index = index;
  n->kids = std::move(kids);
  return Access::build(std::move(n));
}

bool is_const(const Expr& e, double v) {
  return e.kind() == Expr::Kind::Const && e.const_value() == v;
}

}  // namespace

Expr Expr::constant(double v) { return make(Kind::Const, {}, v); }

Expr Expr::var(int index) {
  if (index < 0) raise(ErrorKind::InvalidArgument, "negative variable index");
  return make(Kind::Var, {}, 0.0, index);
}

Expr Expr::add(Expr a, Expr b) {
  if (a.kind() == Kind::Const && b.kind() == Kind::Const)
    return constant(a.const_value() + b.const_value());
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return make(Kind::Add, {std::move(a), std::move(b)});
}

Expr Expr::sub(Expr a, Expr b) {
  if (a.kind() == Kind::Const && b.kind() == Kind::Const)
    return constant(a.const_value() - b.const_value());
  if (is_const(b, 0.0)) return a;
  return make(Kind::Sub, {std::move(a), std::move(b)});
}

Expr Expr::mul(Expr a, Expr b) {
  if (a.kind() == Kind::Const && b.kind() == Kind::Const)
    return constant(a.const_value() * b.const_value());
  // Safe inside declared domain boxes: operands are finite there.
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return make(Kind::Mul, {std::move(a), std::move(b)});
}

Expr Expr::div(Expr a, Expr b) {
  if (a.kind() == Kind::Const && b.kind() == Kind::Const &&
      b.const_value() != 0.0)
    return constant(a.const_value() / b.const_value());
  if (is_const(b, 1.0)) return a;
  return make(Kind::Div, {std::move(a), std::move(b)});
}

Expr Expr::pow(Expr base, int exponent) {
  if (exponent == 0) return constant(1.0);
  if (exponent == 1) return base;
  if (base.kind() == Kind::Const && !(base.const_value() == 0.0 && exponent < 0))
    return constant(std::pow(base.const_value(), exponent));
  return make(Kind::Pow, {std::move(base)}, 0.0, exponent);
}

Expr Expr::sin(Expr a) {
  if (a.kind() == Kind::Const) return constant(std::sin(a.const_value()));
  return make(Kind::Sin, {std::move(a)});
}
Expr Expr::cos(Expr a) {
  if (a.kind() == Kind::Const) return constant(std::cos(a.const_value()));
  return make(Kind::Cos, {std::move(a)});
}
Expr Expr::exp(Expr a) {
  if (a.kind() == Kind::Const) return constant(std::exp(a.const_value()));
  return make(Kind::Exp, {std::move(a)});
}
Expr Expr::log(Expr a) {
  if (a.kind() == Kind::Const && a.const_value() > 0.0)
    return constant(std::log(a.const_value()));
  return make(Kind::Log, {std::move(a)});
}
Expr Expr::abs(Expr a) {
  if (a.kind() == Kind::Const) return constant(std::fabs(a.const_value()));
  return make(Kind::Abs, {std::move(a)});
}
Expr Expr::sign(Expr a) { return make(Kind::Sign, {std::move(a)}); }

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::const_value() const { return node_->value; }
int Expr::var_index() const { return node_->index; }
int Expr::exponent() const { return node_->index; }
const Expr& Expr::child(int i) const { return node_->kids[static_cast<size_t>(i)]; }
int Expr::arity() const { return static_cast<int>(node_->kids.size()); }

double Expr::eval(std::span<const double> x) const {
  auto finite = [](double v) -> double {
    if (!std::isfinite(v)) raise(ErrorKind::NonFinite, "evaluation left the finite range");
    return v;
  };
  switch (node_->kind) {
    case Kind::Const:
      return node_->value;
    case Kind::Var:
      if (node_->index >= static_cast<int>(x.size()))
        raise(ErrorKind::InvalidArgument,
              "variable x" + std::to_string(node_->index + 1) +
                  " unbound at evaluation");
      return x[static_cast<size_t>(node_->index)];
    case Kind::Add:
      return finite(child(0).eval(x) + child(1).eval(x));
    case Kind::Sub:
      return finite(child(0).eval(x) - child(1).eval(x));
    case Kind::Mul:
      return finite(child(0).eval(x) * child(1).eval(x));
    case Kind::Div: {
      double d = child(1).eval(x);
      if (d == 0.0) raise(ErrorKind::NonFinite, "division by zero");
      return finite(child(0).eval(x) / d);
    }
    case Kind::Pow: {
      double b = child(0).eval(x);
      if (b == 0.0 && node_->index < 0)
        raise(ErrorKind::NonFinite, "zero base with negative exponent");
      return finite(std::pow(b, node_->index));
    }
    case Kind::Sin:
      return std::sin(child(0).eval(x));
    case Kind::Cos:
      return std::cos(child(0).eval(x));
    case Kind::Exp:
      return finite(std::exp(child(0).eval(x)));
    case Kind::Log: {
      double a = child(0).eval(x);
      if (!(a > 0.0)) raise(ErrorKind::NonFinite, "log of non-positive value");
      return finite(std::log(a));
    }
    case Kind::Abs:
      return std::fabs(child(0).eval(x));
    case Kind::Sign: {
      double a = child(0).eval(x);
      if (a == 0.0)
        raise(ErrorKind::NonDifferentiable, "abs differentiated at zero argument");
      return a > 0.0 ? 1.0 : -1.0;
    }
  }
  raise(ErrorKind::InvalidArgument, "corrupt expression node");
}

Expr Expr::derivative(int index) const {
  switch (node_->kind) {
    case Kind::Const:
      return constant(0.0);
    case Kind::Var:
      return constant(node_->index == index ? 1.0 : 0.0);
    case Kind::Add:
      return add(child(0).derivative(index), child(1).derivative(index));
    case Kind::Sub:
      return sub(child(0).derivative(index), child(1).derivative(index));
    case Kind::Mul:
      return add(mul(child(0).derivative(index), child(1)),
                 mul(child(0), child(1).derivative(index)));
    case Kind::Div:
      return div(sub(mul(child(0).derivative(index), child(1)),
                     mul(child(0), child(1).derivative(index))),
                 pow(child(1), 2));
    case Kind::Pow:
      return mul(mul(constant(node_->index), pow(child(0), node_->index - 1)),
                 child(0).derivative(index));
    case Kind::Sin:
      return mul(cos(child(0)), child(0).derivative(index));
    case Kind::Cos:
      return mul(constant(-1.0), mul(sin(child(0)), child(0).derivative(index)));
    case Kind::Exp:
      return mul(exp(child(0)), child(0).derivative(index));
    case Kind::Log:
      return div(child(0).derivative(index), child(0));
    case Kind::Abs:
      return mul(sign(child(0)), child(0).derivative(index));
    case Kind::Sign:
      // Zero almost everywhere; the kink itself is guarded at first order.
      return constant(0.0);
  }
  raise(ErrorKind::InvalidArgument, "corrupt expression node");
}

Expr Expr::substitute(const std::vector<Expr>& args) const {
  switch (node_->kind) {
    case Kind::Const:
      return *this;
    case Kind::Var:
      if (node_->index >= static_cast<int>(args.size()))
        raise(ErrorKind::InvalidArgument,
              "substitution misses variable x" + std::to_string(node_->index + 1));
      return args[static_cast<size_t>(node_->index)];
    case Kind::Add:
      return add(child(0).substitute(args), child(1).substitute(args));
    case Kind::Sub:
      return sub(child(0).substitute(args), child(1).substitute(args));
    case Kind::Mul:
      return mul(child(0).substitute(args), child(1).substitute(args));
    case Kind::Div:
      return div(child(0).substitute(args), child(1).substitute(args));
    case Kind::Pow:
      return pow(child(0).substitute(args), node_->index);
    case Kind::Sin:
      return sin(child(0).substitute(args));
    case Kind::Cos:
      return cos(child(0).substitute(args));
    case Kind::Exp:
      return exp(child(0).substitute(args));
    case Kind::Log:
      return log(child(0).substitute(args));
    case Kind::Abs:
      return abs(child(0).substitute(args));
    case Kind::Sign:
      return sign(child(0).substitute(args));
  }
  raise(ErrorKind::InvalidArgument, "corrupt expression node");
}

int Expr::max_var() const {
  if (node_->kind == Kind::Var) return node_->index;
  int m = -1;
  for (const auto& k : node_->kids) m = std::max(m, k.max_var());
  return m;
}

bool Expr::contains_abs() const {
  if (node_->kind == Kind::Abs || node_->kind == Kind::Sign) return true;
  for (const auto& k : node_->kids)
    if (k.contains_abs()) return true;
  return false;
}

std::string Expr::to_string() const {
  switch (node_->kind) {
    case Kind::Const:
      return format_double(node_->value);
    case Kind::Var:
      return "x" + std::to_string(node_->index + 1);
    case Kind::Pow:
      return "(pow " + child(0).to_string() + " " +
             std::to_string(node_->index) + ")";
    default: {
      static const char* names[] = {"",    "",    "add", "sub", "mul", "div",
                                    "",    "sin", "cos", "exp", "log", "abs",
                                    "sign"};
      std::string out = "(";
      out += names[static_cast<int>(node_->kind)];
      for (const auto& k : node_->kids) {
        out += ' ';
        out += k.to_string();
      }
      out += ')';
      return out;
    }
  }
}

bool Expr::same_tree(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  if (node_->kind == Kind::Const) return node_->value == other.node_->value;
  if (node_->index != other.node_->index) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (size_t i = 0; i < node_->kids.size(); ++i)
    if (!node_->kids[i].same_tree(other.node_->kids[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser: prefix s-expressions.
//   expr    := number | variable | "(" op expr... ")"
//   variable := "t" | "x" digits        (t is an alias for x1)
//   op      := add | sub | mul | div | pow | sin | cos | exp | log | abs | neg
// add/mul take two or more operands (left fold), sub/div exactly two,
// pow an expression and an integer literal, the rest exactly one.

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, size_t at) {
    raise(ErrorKind::ParseError,
          msg + " at offset " + std::to_string(at));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (start == pos) fail("expected token", pos);
    return s.substr(start, pos - start);
  }

  Expr atom(const std::string& tok, size_t at) {
    if (tok == "t") return Expr::var(0);
    if (tok.size() >= 2 && tok[0] == 'x' &&
        std::isdigit(static_cast<unsigned char>(tok[1]))) {
      char* end = nullptr;
      long idx = std::strtol(tok.c_str() + 1, &end, 10);
      if (*end == '\0' && idx >= 1) return Expr::var(static_cast<int>(idx - 1));
    }
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() + tok.size()) return Expr::constant(v);
    fail("unrecognized atom '" + tok + "'", at);
  }

  Expr parse_expr() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input", pos);
    if (s[pos] != '(') {
      size_t at = pos;
      return atom(token(), at);
    }
    ++pos;  // consume '('
    size_t at = pos;
    std::string op = token();
    std::vector<Expr> args;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
      if (op == "pow" && args.size() == 1) {
        size_t eat = pos;
        std::string tok = token();
        char* end = nullptr;
        long e = std::strtol(tok.c_str(), &end, 10);
        if (*end != '\0') fail("pow exponent must be an integer literal", eat);
        args.push_back(Expr::constant(static_cast<double>(e)));
      } else {
        args.push_back(parse_expr());
      }
      skip_ws();
    }
    if (pos >= s.size()) fail("missing ')'", pos);
    ++pos;  // consume ')'
    return build(op, std::move(args), at);
  }

  Expr build(const std::string& op, std::vector<Expr> args, size_t at) {
    auto need = [&](size_t n) {
      if (args.size() != n)
        fail("'" + op + "' takes " + std::to_string(n) + " argument(s)", at);
    };
    if (op == "add" || op == "mul") {
      if (args.size() < 2) fail("'" + op + "' takes at least two arguments", at);
      Expr acc = args[0];
      for (size_t i = 1; i < args.size(); ++i)
        acc = (op == "add") ? Expr::add(acc, args[i]) : Expr::mul(acc, args[i]);
      return acc;
    }
    if (op == "sub") { need(2); return Expr::sub(args[0], args[1]); }
    if (op == "div") { need(2); return Expr::div(args[0], args[1]); }
    if (op == "pow") {
      need(2);
      return Expr::pow(args[0], static_cast<int>(args[1].const_value()));
    }
    if (op == "sin") { need(1); return Expr::sin(args[0]); }
    if (op == "cos") { need(1); return Expr::cos(args[0]); }
    if (op == "exp") { need(1); return Expr::exp(args[0]); }
    if (op == "log") { need(1); return Expr::log(args[0]); }
    if (op == "abs") { need(1); return Expr::abs(args[0]); }
    if (op == "neg") { need(1); return Expr::sub(Expr::constant(0.0), args[0]); }
    fail("unknown operator '" + op + "'", at);
  }
};

}  // namespace

Expr Expr::parse(const std::string& text) {
  Parser p{text};
  Expr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    raise(ErrorKind::ParseError,
          "trailing input at offset " + std::to_string(p.pos));
  return e;
}

}  // namespace selman
