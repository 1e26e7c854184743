// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lyapcert/expr.hpp"
#include "lyapcert/tape.hpp"
#include "test_util.hpp"

using namespace lyap;
using namespace lyap::testutil;

TEST_CASE("eval_point basics") {
  Expr x0 = Expr::variable(0);
  Expr x1 = Expr::variable(1);

  CHECK(eval_point(sin(x0), {0.0}) == 0.0);
  CHECK(eval_point(tanh(x0), {0.0}) == 0.0);
  CHECK(eval_point(x0 * x0 - x1, {3.0, 2.0}) == 7.0);

  CHECK_THROWS_AS(eval_point(x0 / x1, {1.0, 0.0}), DivisionByZero);
  CHECK_THROWS_AS(eval_point(x0, {}), DimensionMismatch);
}

TEST_CASE("eval_interval examples") {
  Expr x0 = Expr::variable(0);

  SUBCASE("sin over [0, pi/2] covers [0, 1]") {
    Interval r = eval_interval(sin(x0), Box({{0.0, kPi / 2.0}}));
    CHECK(r.lo <= 0.0);
    CHECK(r.hi >= 1.0);
    CHECK(r.hi <= 1.0 + 1e-12);
    CHECK(r.lo >= -1e-12);
  }

  SUBCASE("naive multiplication keeps the dependency problem") {
    Interval r = eval_interval(x0 * x0, Box({{-1.0, 2.0}}));
    CHECK(r.lo == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(r.hi == doctest::Approx(4.0).epsilon(1e-12));
  }

  SUBCASE("pow uses the even power rule") {
    Interval r = eval_interval(pow(x0, 2), Box({{-1.0, 2.0}}));
    CHECK(r.lo == 0.0);
    CHECK(r.hi == doctest::Approx(4.0).epsilon(1e-12));
  }

  SUBCASE("tanh is monotone") {
    Interval r = eval_interval(tanh(x0), Box({{0.0, 1.0}}));
    CHECK(r.lo <= 0.0);
    CHECK(r.hi >= std::tanh(1.0));
    CHECK(r.hi == doctest::Approx(0.7615941559557649).epsilon(1e-12));
  }

  SUBCASE("division by a straddling interval fails") {
    Expr e = Expr::constant(1.0) / x0;
    CHECK(!try_eval_interval(e, Box({{-1.0, 1.0}})).has_value());
    CHECK_THROWS_AS(eval_interval(e, Box({{-1.0, 1.0}})), DomainError);
  }
}

TEST_CASE("differentiate analytic cases") {
  Expr x0 = Expr::variable(0);
  Expr x1 = Expr::variable(1);

  SUBCASE("d/dx tanh(x) = 1 - tanh^2(x)") {
    Expr d = differentiate(tanh(x0), 0);
    for (double v : {-2.0, -0.3, 0.0, 0.7, 1.9}) {
      double expected = 1.0 - std::tanh(v) * std::tanh(v);
      CHECK(eval_point(d, {v}) == doctest::Approx(expected).epsilon(1e-14));
    }
  }

  SUBCASE("product rule: d/dx x sin(x)") {
    Expr d = differentiate(x0 * sin(x0), 0);
    for (double v : {-1.5, 0.0, 0.4, 2.2}) {
      double expected = std::sin(v) + v * std::cos(v);
      CHECK(eval_point(d, {v}) == doctest::Approx(expected).epsilon(1e-14));
    }
  }

  SUBCASE("single tanh unit gradient factor") {
    // V = tanh(a1*x0 + a2*x1 + b) -> dV/dx0 = a1*(1 - tanh^2(...))
    const double a1 = 0.8, a2 = -1.3, b = 0.25;
    Expr z = a1 * x0 + a2 * x1 + b;
    Expr d = differentiate(tanh(z), 0);
    for (double u : {-1.0, 0.0, 0.5}) {
      for (double v : {-0.7, 0.2, 1.4}) {
        double zt = std::tanh(a1 * u + a2 * v + b);
        double expected = a1 * (1.0 - zt * zt);
        CHECK(eval_point(d, {u, v}) ==
              doctest::Approx(expected).epsilon(1e-13));
      }
    }
  }

  SUBCASE("quotient rule") {
    Expr e = x0 / (Expr::constant(1.0) + pow(x0, 2));
    Expr d = differentiate(e, 0);
    for (double v : {-2.0, -0.1, 0.9}) {
      double den = 1.0 + v * v;
      double expected = (den - v * 2.0 * v) / (den * den);
      CHECK(eval_point(d, {v}) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("containment: point evaluation lies inside interval evaluation") {
  Rng rng(20260810);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Expr e = gen_expr(rng, 3, 4);
    Box b = gen_box(rng, 3);
    std::vector<double> x = point_in_box(rng, b);
    auto iv = try_eval_interval(e, b);
    if (!iv) continue; // un-prunable boxes make no containment claim
    double v = 0.0;
    bool ok_point = true;
    try {
      v = eval_point(e, x);
    } catch (const Error &) {
      ok_point = false;
    }
    if (!ok_point) continue;
    ++checked;
    REQUIRE_MESSAGE(iv->contains(v),
                    "violation: value " << v << " outside [" << iv->lo << ", "
                                        << iv->hi << "] for " << to_sexpr(e));
  }
  // the generator must keep most draws evaluable for the property to mean much
  CHECK(checked > 8000);
}

TEST_CASE("derivative consistency against central differences") {
  Rng rng(99123);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Expr e = gen_expr(rng, 3, 4);
    Box b = gen_box(rng, 3, 1.0);
    std::vector<double> x = point_in_box(rng, b);
    for (int i = 0; i < 3; ++i) {
      Expr d = differentiate(e, i);
      double exact = 0.0, value = 0.0, approx = 0.0;
      try {
        exact = eval_point(d, x);
        value = eval_point(e, x);
        approx = central_difference(
            [&](const std::vector<double> &p) { return eval_point(e, p); }, x,
            static_cast<std::size_t>(i), 1e-5);
      } catch (const Error &) {
        continue;
      }
      // skip wildly scaled draws where the finite difference itself degrades
      if (std::abs(exact) > 1e6) continue;
      ++checked;
      CHECK_MESSAGE(std::abs(exact - approx) <= 1e-4 * (1.0 + std::abs(value) +
                                                        std::abs(exact)),
                    "expr " << to_sexpr(e) << " var " << i << " exact " << exact
                            << " approx " << approx);
    }
  }
  CHECK(checked > 600);
}

TEST_CASE("width of exact-family enclosures shrinks with the box") {
  Rng rng(7071);
  for (int trial = 0; trial < 1500; ++trial) {
    Expr e = gen_single_occurrence_expr(rng, {0, 1, 2});
    Box outer = gen_box(rng, 3);
    Box inner = outer;
    for (auto &iv : inner.dims) {
      double a = rng.uniform(iv.lo, iv.hi);
      double b = rng.uniform(iv.lo, iv.hi);
      iv = {std::min(a, b), std::max(a, b)};
    }
    auto wide = try_eval_interval(e, outer);
    auto narrow = try_eval_interval(e, inner);
    REQUIRE(wide.has_value());
    REQUIRE(narrow.has_value());
    CHECK(narrow->width() <= wide->width());
  }
}

TEST_CASE("s-expression round trip") {
  SUBCASE("documented example form") {
    Expr e = parse_sexpr("(add (mul 2.0 (sin (var 0))) (var 1))");
    CHECK(eval_point(e, {kPi / 2.0, 3.0}) == doctest::Approx(5.0));
    CHECK(to_sexpr(e) == "(add (mul 2 (sin (var 0))) (var 1))");
  }

  SUBCASE("random expressions survive print/parse exactly") {
    Rng rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
      Expr e = gen_expr(rng, 2, 4);
      Expr back = parse_sexpr(to_sexpr(e));
      Box b = gen_box(rng, 2, 1.0);
      std::vector<double> x = point_in_box(rng, b);
      double v0 = 0.0, v1 = 0.0;
      try {
        v0 = eval_point(e, x);
        v1 = eval_point(back, x);
      } catch (const Error &) {
        continue;
      }
      CHECK(v0 == v1); // shortest round-trip printing is exact
    }
  }

  SUBCASE("parse errors") {
    CHECK_THROWS_AS(parse_sexpr("(bogus 1 2)"), ParseError);
    CHECK_THROWS_AS(parse_sexpr("(add 1"), ParseError);
    CHECK_THROWS_AS(parse_sexpr("(add 1 2) junk"), ParseError);
    CHECK_THROWS_AS(parse_sexpr("(pow (var 0) -2)"), ParseError);
    CHECK_THROWS_AS(parse_sexpr(""), ParseError);
  }
}

TEST_CASE("expression DAG sharing survives the tape") {
  // one tanh node referenced by V and by its derivative
  Expr z = 0.7 * Expr::variable(0) + 0.1;
  Expr t = tanh(z);
  Expr combined = t + differentiate(t, 0);
  Tape tape(combined);
  double v = tape.eval_point_single(std::vector<double>{0.3});
  double zt = std::tanh(0.7 * 0.3 + 0.1);
  CHECK(v == doctest::Approx(zt + 0.7 * (1.0 - zt * zt)).epsilon(1e-14));
}
