// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_EXPR_HPP
#define LYAPCERT_EXPR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lyapcert/errors.hpp"
#include "lyapcert/interval.hpp"

namespace lyap {

enum class ExprKind : std::uint8_t {
  Const,
  Var,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow, // non-negative integer exponent
  Sin,
  Cos,
  Tanh,
};

struct ExprNode;
using ExprNodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  ExprKind kind;
  double value = 0.0; // Const
  int var = -1;       // Var
  int exponent = 0;   // Pow
  ExprNodePtr a;
  ExprNodePtr b;
  int max_var = -1; // largest Var index in the subgraph
};

// Immutable handle to a node of a shared expression DAG. Copies are cheap
// and all operations are pure, so Expr values can be shared across threads.
class Expr {
public:
  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double v);
  static Expr variable(int index);

  ExprKind kind() const { return node_->kind; }
  double const_value() const { return node_->value; }
  int var_index() const { return node_->var; }
  int exponent() const { return node_->exponent; }
  Expr child_a() const { return Expr(node_->a); }
  Expr child_b() const { return Expr(node_->b); }
  // smallest n such that all Var indices are < n
  int min_dim() const { return node_->max_var + 1; }

  const ExprNode *node() const { return node_.get(); }
  const ExprNodePtr &ptr() const { return node_; }

  explicit Expr(ExprNodePtr n) : node_(std::move(n)) {}

private:
  ExprNodePtr node_;
};

// Builders fold constants and apply 0/1 identities; nothing more aggressive.
Expr operator+(const Expr &a, const Expr &b);
Expr operator-(const Expr &a, const Expr &b);
Expr operator*(const Expr &a, const Expr &b);
Expr operator/(const Expr &a, const Expr &b);
Expr operator-(const Expr &a);
Expr pow(const Expr &a, int exponent);
Expr sin(const Expr &a);
Expr cos(const Expr &a);
Expr tanh(const Expr &a);

inline Expr operator+(const Expr &a, double c) { return a + Expr::constant(c); }
inline Expr operator+(double c, const Expr &a) { return Expr::constant(c) + a; }
inline Expr operator-(const Expr &a, double c) { return a - Expr::constant(c); }
inline Expr operator-(double c, const Expr &a) { return Expr::constant(c) - a; }
inline Expr operator*(const Expr &a, double c) { return a * Expr::constant(c); }
inline Expr operator*(double c, const Expr &a) { return Expr::constant(c) * a; }
inline Expr operator/(const Expr &a, double c) { return a / Expr::constant(c); }
inline Expr operator/(double c, const Expr &a) { return Expr::constant(c) / a; }

// Exact symbolic partial derivative with respect to variable `index`.
Expr differentiate(const Expr &e, int index);

// Replaces Var(i) by replacements[i]; indices at or past replacements.size()
// are kept as-is.
Expr substitute_vars(const Expr &e, const std::vector<Expr> &replacements);

// IEEE evaluation at a point. Division by exact zero and non-finite
// intermediates raise.
double eval_point(const Expr &e, const std::vector<double> &x);

// Outward-rounded interval enclosure: eval_point(e, x) is contained in the
// result for every x in the box. Throws DomainError when a division child
// straddles zero (or an intermediate leaves the finite range).
Interval eval_interval(const Expr &e, const Box &b);

// Non-throwing variant for pruning loops; nullopt marks the box un-prunable.
std::optional<Interval> try_eval_interval(const Expr &e, const Box &b);

// Textual s-expression form, e.g. "(add (mul 2 (sin (var 0))) (var 1))".
std::string to_sexpr(const Expr &e);
Expr parse_sexpr(const std::string &text);

} // namespace lyap

#endif // LYAPCERT_EXPR_HPP
