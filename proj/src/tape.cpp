// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#include "lyapcert/tape.hpp"

#include <cmath>
#include <unordered_map>

namespace lyap {

Tape Tape::build(const std::vector<Expr> &roots) {
  Tape t;
  std::unordered_map<const ExprNode *, int> slot;
  // iterative postorder; shared nodes get a single slot
  struct Frame {
    const ExprNode *node;
    bool expanded;
  };
  std::vector<Frame> stack;
  for (const Expr &root : roots) {
    stack.push_back({root.node(), false});
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (slot.count(f.node)) continue;
      if (!f.expanded) {
        stack.push_back({f.node, true});
        if (f.node->a && !slot.count(f.node->a.get()))
          stack.push_back({f.node->a.get(), false});
        if (f.node->b && !slot.count(f.node->b.get()))
          stack.push_back({f.node->b.get(), false});
        continue;
      }
      Op op;
      op.kind = f.node->kind;
      op.cval = f.node->value;
      op.var = f.node->var;
      op.exponent = f.node->exponent;
      if (f.node->a) op.a = slot.at(f.node->a.get());
      if (f.node->b) op.b = slot.at(f.node->b.get());
      slot.emplace(f.node, static_cast<int>(t.ops_.size()));
      t.ops_.push_back(op);
      t.max_var_ = std::max(t.max_var_, f.node->max_var);
    }
    t.roots_.push_back(slot.at(root.node()));
  }
  return t;
}

void Tape::eval_point(std::span<const double> x, std::vector<double> &scratch,
                      std::span<double> out) const {
  if (static_cast<int>(x.size()) < min_dim())
    throw DimensionMismatch("point dimension below tape requirement");
  scratch.resize(ops_.size());
  double *s = scratch.data();
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op &op = ops_[i];
    double v = 0.0;
    switch (op.kind) {
    case ExprKind::Const:
      v = op.cval;
      break;
    case ExprKind::Var:
      v = x[static_cast<std::size_t>(op.var)];
      break;
    case ExprKind::Neg:
      v = -s[op.a];
      break;
    case ExprKind::Add:
      v = s[op.a] + s[op.b];
      break;
    case ExprKind::Sub:
      v = s[op.a] - s[op.b];
      break;
    case ExprKind::Mul:
      v = s[op.a] * s[op.b];
      break;
    case ExprKind::Div:
      if (s[op.b] == 0.0) throw DivisionByZero("division by exact zero");
      v = s[op.a] / s[op.b];
      break;
    case ExprKind::Pow:
      v = std::pow(s[op.a], op.exponent);
      break;
    case ExprKind::Sin:
      v = std::sin(s[op.a]);
      break;
    case ExprKind::Cos:
      v = std::cos(s[op.a]);
      break;
    case ExprKind::Tanh:
      v = std::tanh(s[op.a]);
      break;
    }
    if (!std::isfinite(v))
      throw NonFiniteResult("non-finite intermediate in point evaluation");
    s[i] = v;
  }
  for (std::size_t r = 0; r < roots_.size(); ++r)
    out[r] = s[roots_[r]];
}

double Tape::eval_point_single(std::span<const double> x) const {
  std::vector<double> scratch;
  double out = 0.0;
  eval_point(x, scratch, {&out, 1});
  return out;
}

bool Tape::eval_interval(const Box &box, std::vector<Interval> &scratch,
                         std::span<Interval> out) const noexcept {
  if (box.dim() < min_dim()) return false;
  scratch.resize(ops_.size());
  Interval *s = scratch.data();
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op &op = ops_[i];
    Interval v;
    switch (op.kind) {
    case ExprKind::Const:
      v = Interval::point(op.cval);
      break;
    case ExprKind::Var:
      v = box.dims[static_cast<std::size_t>(op.var)];
      break;
    case ExprKind::Neg:
      v = ineg(s[op.a]);
      break;
    case ExprKind::Add:
      v = iadd(s[op.a], s[op.b]);
      break;
    case ExprKind::Sub:
      v = isub(s[op.a], s[op.b]);
      break;
    case ExprKind::Mul:
      v = imul(s[op.a], s[op.b]);
      break;
    case ExprKind::Div: {
      auto q = idiv(s[op.a], s[op.b]);
      if (!q) return false;
      v = *q;
      break;
    }
    case ExprKind::Pow:
      v = ipow(s[op.a], op.exponent);
      break;
    case ExprKind::Sin:
      v = isin(s[op.a]);
      break;
    case ExprKind::Cos:
      v = icos(s[op.a]);
      break;
    case ExprKind::Tanh:
      v = itanh(s[op.a]);
      break;
    }
    if (!v.finite()) return false;
    s[i] = v;
  }
  for (std::size_t r = 0; r < roots_.size(); ++r)
    out[r] = s[roots_[r]];
  return true;
}

} // namespace lyap
