// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapcert/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "lyapcert/tape.hpp"

namespace lyap {

namespace {

ExprNodePtr make_node(ExprKind kind, double value, int var, int exponent,
                      ExprNodePtr a, ExprNodePtr b) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  n->value = value;
  n->var = var;
  n->exponent = exponent;
  n->max_var = var;
  if (a) n->max_var = std::max(n->max_var, a->max_var);
  if (b) n->max_var = std::max(n->max_var, b->max_var);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool is_const(const Expr &e, double v) {
  return e.kind() == ExprKind::Const && e.const_value() == v;
}

} // namespace

Expr Expr::constant(double v) {
  return Expr(make_node(ExprKind::Const, v, -1, 0, nullptr, nullptr));
}

Expr Expr::variable(int index) {
  if (index < 0) throw DimensionMismatch("variable index must be >= 0");
  return Expr(make_node(ExprKind::Var, 0.0, index, 0, nullptr, nullptr));
}

Expr operator+(const Expr &a, const Expr &b) {
  if (a.kind() == ExprKind::Const && b.kind() == ExprKind::Const)
    return Expr::constant(a.const_value() + b.const_value());
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  return Expr(make_node(ExprKind::Add, 0.0, -1, 0, a.ptr(), b.ptr()));
}

Expr operator-(const Expr &a, const Expr &b) {
  if (a.kind() == ExprKind::Const && b.kind() == ExprKind::Const)
    return Expr::constant(a.const_value() - b.const_value());
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return -b;
  return Expr(make_node(ExprKind::Sub, 0.0, -1, 0, a.ptr(), b.ptr()));
}

Expr operator*(const Expr &a, const Expr &b) {
  if (a.kind() == ExprKind::Const && b.kind() == ExprKind::Const)
    return Expr::constant(a.const_value() * b.const_value());
  if (is_const(a, 0.0) || is_const(b, 0.0)) return Expr::constant(0.0);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  return Expr(make_node(ExprKind::Mul, 0.0, -1, 0, a.ptr(), b.ptr()));
}

Expr operator/(const Expr &a, const Expr &b) {
  if (a.kind() == ExprKind::Const && b.kind() == ExprKind::Const &&
      b.const_value() != 0.0)
    return Expr::constant(a.const_value() / b.const_value());
  if (is_const(b, 1.0)) return a;
  return Expr(make_node(ExprKind::Div, 0.0, -1, 0, a.ptr(), b.ptr()));
}

Expr operator-(const Expr &a) {
  if (a.kind() == ExprKind::Const) return Expr::constant(-a.const_value());
  return Expr(make_node(ExprKind::Neg, 0.0, -1, 0, a.ptr(), nullptr));
}

Expr pow(const Expr &a, int exponent) {
  if (exponent < 0) throw DomainError("pow exponent must be >= 0");
  if (exponent == 0) return Expr::constant(1.0);
  if (exponent == 1) return a;
  if (a.kind() == ExprKind::Const)
    return Expr::constant(std::pow(a.const_value(), exponent));
  return Expr(make_node(ExprKind::Pow, 0.0, -1, exponent, a.ptr(), nullptr));
}

Expr sin(const Expr &a) {
  if (a.kind() == ExprKind::Const)
    return Expr::constant(std::sin(a.const_value()));
  return Expr(make_node(ExprKind::Sin, 0.0, -1, 0, a.ptr(), nullptr));
}

Expr cos(const Expr &a) {
  if (a.kind() == ExprKind::Const)
    return Expr::constant(std::cos(a.const_value()));
  return Expr(make_node(ExprKind::Cos, 0.0, -1, 0, a.ptr(), nullptr));
}

Expr tanh(const Expr &a) {
  if (a.kind() == ExprKind::Const)
    return Expr::constant(std::tanh(a.const_value()));
  return Expr(make_node(ExprKind::Tanh, 0.0, -1, 0, a.ptr(), nullptr));
}

namespace {

class Differentiator {
public:
  explicit Differentiator(int index) : index_(index) {}

  Expr run(const Expr &e) {
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second;
    Expr d = derive(e);
    memo_.emplace(e.node(), d);
    return d;
  }

private:
  Expr derive(const Expr &e) {
    switch (e.kind()) {
    case ExprKind::Const:
      return Expr::constant(0.0);
    case ExprKind::Var:
      return Expr::constant(e.var_index() == index_ ? 1.0 : 0.0);
    case ExprKind::Neg:
      return -run(e.child_a());
    case ExprKind::Add:
      return run(e.child_a()) + run(e.child_b());
    case ExprKind::Sub:
      return run(e.child_a()) - run(e.child_b());
    case ExprKind::Mul:
      return run(e.child_a()) * e.child_b() + e.child_a() * run(e.child_b());
    case ExprKind::Div: {
      Expr u = e.child_a();
      Expr v = e.child_b();
      return (run(u) * v - u * run(v)) / pow(v, 2);
    }
    case ExprKind::Pow: {
      Expr u = e.child_a();
      int n = e.exponent();
      return Expr::constant(static_cast<double>(n)) * pow(u, n - 1) * run(u);
    }
    case ExprKind::Sin:
      return cos(e.child_a()) * run(e.child_a());
    case ExprKind::Cos:
      return -(sin(e.child_a()) * run(e.child_a()));
    case ExprKind::Tanh:
      // reuse the existing tanh node so V and its derivatives share work
      return (Expr::constant(1.0) - pow(e, 2)) * run(e.child_a());
    }
    throw Error("unreachable expression kind");
  }

  int index_;
  std::unordered_map<const ExprNode *, Expr> memo_;
};

} // namespace

Expr differentiate(const Expr &e, int index) {
  if (index < 0) throw DimensionMismatch("derivative index must be >= 0");
  return Differentiator(index).run(e);
}

namespace {

Expr substitute_impl(const Expr &e, const std::vector<Expr> &repl,
                     std::unordered_map<const ExprNode *, Expr> &memo) {
  auto it = memo.find(e.node());
  if (it != memo.end()) return it->second;
  Expr out = e;
  switch (e.kind()) {
  case ExprKind::Const:
    break;
  case ExprKind::Var:
    if (e.var_index() < static_cast<int>(repl.size()))
      out = repl[static_cast<std::size_t>(e.var_index())];
    break;
  case ExprKind::Neg:
    out = -substitute_impl(e.child_a(), repl, memo);
    break;
  case ExprKind::Add:
    out = substitute_impl(e.child_a(), repl, memo) +
          substitute_impl(e.child_b(), repl, memo);
    break;
  case ExprKind::Sub:
    out = substitute_impl(e.child_a(), repl, memo) -
          substitute_impl(e.child_b(), repl, memo);
    break;
  case ExprKind::Mul:
    out = substitute_impl(e.child_a(), repl, memo) *
          substitute_impl(e.child_b(), repl, memo);
    break;
  case ExprKind::Div:
    out = substitute_impl(e.child_a(), repl, memo) /
          substitute_impl(e.child_b(), repl, memo);
    break;
  case ExprKind::Pow:
    out = pow(substitute_impl(e.child_a(), repl, memo), e.exponent());
    break;
  case ExprKind::Sin:
    out = sin(substitute_impl(e.child_a(), repl, memo));
    break;
  case ExprKind::Cos:
    out = cos(substitute_impl(e.child_a(), repl, memo));
    break;
  case ExprKind::Tanh:
    out = tanh(substitute_impl(e.child_a(), repl, memo));
    break;
  }
  memo.emplace(e.node(), out);
  return out;
}

} // namespace

Expr substitute_vars(const Expr &e, const std::vector<Expr> &replacements) {
  std::unordered_map<const ExprNode *, Expr> memo;
  return substitute_impl(e, replacements, memo);
}

double eval_point(const Expr &e, const std::vector<double> &x) {
  Tape t(e);
  return t.eval_point_single(x);
}

Interval eval_interval(const Expr &e, const Box &b) {
  auto r = try_eval_interval(e, b);
  if (!r) throw DomainError("interval evaluation failed over the box");
  return *r;
}

std::optional<Interval> try_eval_interval(const Expr &e, const Box &b) {
  Tape t(e);
  std::vector<Interval> scratch;
  Interval out;
  if (!t.eval_interval(b, scratch, {&out, 1})) return std::nullopt;
  return out;
}

namespace {

void print_number(std::ostringstream &os, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  os.write(buf, res.ptr - buf);
}

void print_sexpr(std::ostringstream &os, const Expr &e) {
  switch (e.kind()) {
  case ExprKind::Const:
    print_number(os, e.const_value());
    return;
  case ExprKind::Var:
    os << "(var " << e.var_index() << ")";
    return;
  case ExprKind::Neg:
    os << "(neg ";
    print_sexpr(os, e.child_a());
    os << ")";
    return;
  case ExprKind::Add:
  case ExprKind::Sub:
  case ExprKind::Mul:
  case ExprKind::Div: {
    const char *tag = e.kind() == ExprKind::Add   ? "add"
                      : e.kind() == ExprKind::Sub ? "sub"
                      : e.kind() == ExprKind::Mul ? "mul"
                                                  : "div";
    os << "(" << tag << " ";
    print_sexpr(os, e.child_a());
    os << " ";
    print_sexpr(os, e.child_b());
    os << ")";
    return;
  }
  case ExprKind::Pow:
    os << "(pow ";
    print_sexpr(os, e.child_a());
    os << " " << e.exponent() << ")";
    return;
  case ExprKind::Sin:
  case ExprKind::Cos:
  case ExprKind::Tanh: {
    const char *tag = e.kind() == ExprKind::Sin   ? "sin"
                      : e.kind() == ExprKind::Cos ? "cos"
                                                  : "tanh";
    os << "(" << tag << " ";
    print_sexpr(os, e.child_a());
    os << ")";
    return;
  }
  }
}

struct SexprParser {
  const std::string &text;
  std::size_t pos = 0;

  explicit SexprParser(const std::string &t) : text(t) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError("s-expression parse error at offset " +
                     std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos) fail("expected a token");
    return text.substr(start, pos - start);
  }

  double number(const std::string &tok) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      fail("malformed number '" + tok + "'");
    return v;
  }

  int integer(const std::string &tok) {
    int v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
      fail("malformed integer '" + tok + "'");
    return v;
  }

  Expr parse() {
    if (peek() != '(') return Expr::constant(number(token()));
    ++pos; // consume '('
    std::string head = token();
    Expr out;
    if (head == "var") {
      out = Expr::variable(integer(token()));
    } else if (head == "neg") {
      out = -parse();
    } else if (head == "sin") {
      out = sin(parse());
    } else if (head == "cos") {
      out = cos(parse());
    } else if (head == "tanh") {
      out = tanh(parse());
    } else if (head == "pow") {
      Expr base = parse();
      int e = integer(token());
      if (e < 0) fail("pow exponent must be >= 0");
      out = pow(base, e);
    } else if (head == "add" || head == "sub" || head == "mul" ||
               head == "div") {
      Expr a = parse();
      Expr b = parse();
      out = head == "add"   ? a + b
            : head == "sub" ? a - b
            : head == "mul" ? a * b
                            : a / b;
    } else {
      fail("unknown operator '" + head + "'");
    }
    if (peek() != ')') fail("expected ')'");
    ++pos;
    return out;
  }
};

} // namespace

std::string to_sexpr(const Expr &e) {
  std::ostringstream os;
  print_sexpr(os, e);
  return os.str();
}

Expr parse_sexpr(const std::string &text) {
  SexprParser p(text);
  Expr e = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing characters after s-expression");
  return e;
}

} // namespace lyap
