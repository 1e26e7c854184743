// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_TAPE_HPP
#define LYAPCERT_TAPE_HPP

#include <span>
#include <vector>

#include "lyapcert/expr.hpp"
#include "lyapcert/interval.hpp"

namespace lyap {

// Flattened evaluation program for one or more expressions sharing a DAG.
// Shared nodes are evaluated once per pass. Built once, evaluated many
// times; evaluation itself is allocation-free given caller scratch.
class Tape {
public:
  static Tape build(const std::vector<Expr> &roots);
  explicit Tape(const Expr &e) { *this = build({e}); }
  Tape() = default;

  int n_slots() const { return static_cast<int>(ops_.size()); }
  int n_roots() const { return static_cast<int>(roots_.size()); }
  // smallest input dimension the tape accepts
  int min_dim() const { return max_var_ + 1; }

  // Point evaluation; out receives one value per root.
  // Throws DivisionByZero / NonFiniteResult.
  void eval_point(std::span<const double> x, std::vector<double> &scratch,
                  std::span<double> out) const;
  double eval_point_single(std::span<const double> x) const;

  // Interval evaluation with outward rounding; returns false when a division
  // child straddles zero or an intermediate goes non-finite.
  bool eval_interval(const Box &box, std::vector<Interval> &scratch,
                     std::span<Interval> out) const noexcept;

private:
  struct Op {
    ExprKind kind;
    int a = -1;
    int b = -1;
    double cval = 0.0;
    int var = -1;
    int exponent = 0;
  };
  std::vector<Op> ops_;
  std::vector<int> roots_;
  int max_var_ = -1;
};

} // namespace lyap

#endif // LYAPCERT_TAPE_HPP
