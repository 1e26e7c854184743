// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_INTERVAL_HPP
#define LYAPCERT_INTERVAL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lyap {

// Outward rounding is realized by post-hoc ulp widening instead of FPU
// rounding-mode switches; every bound coming out of a rounded operation is
// pushed away from the enclosed set by at least one ulp.
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double step_down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = next_down(x);
  return x;
}
inline double step_up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i) x = next_up(x);
  return x;
}

// Closed real interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}
  static Interval point(double v) { return {v, v}; }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
  bool valid() const { return lo <= hi; }
  bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

inline Interval iadd(Interval a, Interval b) {
  return {next_down(a.lo + b.lo), next_up(a.hi + b.hi)};
}

inline Interval isub(Interval a, Interval b) {
  return {next_down(a.lo - b.hi), next_up(a.hi - b.lo)};
}

inline Interval ineg(Interval a) { return {-a.hi, -a.lo}; }

inline Interval imul(Interval a, Interval b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {next_down(lo), next_up(hi)};
}

// Fails when the divisor straddles zero.
inline std::optional<Interval> idiv(Interval a, Interval b) {
  if (b.contains_zero()) return std::nullopt;
  const double q1 = a.lo / b.lo;
  const double q2 = a.lo / b.hi;
  const double q3 = a.hi / b.lo;
  const double q4 = a.hi / b.hi;
  const double lo = std::min(std::min(q1, q2), std::min(q3, q4));
  const double hi = std::max(std::max(q1, q2), std::max(q3, q4));
  return Interval{next_down(lo), next_up(hi)};
}

namespace detail {

// x^n by binary exponentiation; reports the number of multiplications so the
// caller can widen by the accumulated rounding error.
inline double ipow_nearest(double x, unsigned n, int &muls) {
  double acc = 1.0;
  double base = x;
  muls = 0;
  while (n > 0) {
    if (n & 1u) {
      acc *= base;
      ++muls;
    }
    n >>= 1u;
    if (n > 0) {
      base *= base;
      ++muls;
    }
  }
  return acc;
}

inline double pow_down(double x, unsigned n) {
  int muls = 0;
  double v = ipow_nearest(x, n, muls);
  return step_down(v, muls + 1);
}

inline double pow_up(double x, unsigned n) {
  int muls = 0;
  double v = ipow_nearest(x, n, muls);
  return step_up(v, muls + 1);
}

// libm sin/cos/tanh are faithful to within a couple of ulps on supported
// targets; bounds are widened by kTranscUlps to stay on the safe side.
constexpr int kTranscUlps = 3;

// True when some point offset + 2*k*pi (k integer) may lie inside [lo, hi].
// The test is enlarged by a margin absorbing the rounding of k*2*pi, so it
// can only over-report, which keeps the enclosing bounds sound.
inline bool contains_periodic_point(double lo, double hi, double offset) {
  const double two_pi = 6.283185307179586476925286766559;
  const double margin =
      1e-9 + 1e-12 * std::max(std::abs(lo), std::abs(hi));
  const double k = std::ceil((lo - offset - margin) / two_pi);
  return offset + k * two_pi <= hi + margin;
}

} // namespace detail

// Integer power with the even/odd range rule (tighter than repeated interval
// multiplication, which would lose the x-with-itself dependency).
inline Interval ipow(Interval x, int n) {
  if (n <= 0) return Interval::point(1.0);
  if (n == 1) return x;
  const unsigned un = static_cast<unsigned>(n);
  if (n % 2 != 0) {
    return {detail::pow_down(x.lo, un), detail::pow_up(x.hi, un)};
  }
  const double big = std::max(std::abs(x.lo), std::abs(x.hi));
  const double small =
      x.contains_zero() ? 0.0 : std::min(std::abs(x.lo), std::abs(x.hi));
  return {std::max(0.0, detail::pow_down(small, un)),
          detail::pow_up(big, un)};
}

inline Interval isin(Interval x) {
  const double two_pi_hi = 6.2831853071795872;
  if (!(x.width() < two_pi_hi)) return {-1.0, 1.0};
  const double half_pi = 1.5707963267948966;
  const bool has_max = detail::contains_periodic_point(x.lo, x.hi, half_pi);
  const bool has_min = detail::contains_periodic_point(x.lo, x.hi, -half_pi);
  const double slo = std::sin(x.lo);
  const double shi = std::sin(x.hi);
  double lo = has_min ? -1.0
                      : step_down(std::min(slo, shi), detail::kTranscUlps);
  double hi = has_max ? 1.0
                      : step_up(std::max(slo, shi), detail::kTranscUlps);
  return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

inline Interval icos(Interval x) {
  const double two_pi_hi = 6.2831853071795872;
  if (!(x.width() < two_pi_hi)) return {-1.0, 1.0};
  const double pi = 3.141592653589793;
  const bool has_max = detail::contains_periodic_point(x.lo, x.hi, 0.0);
  const bool has_min = detail::contains_periodic_point(x.lo, x.hi, pi);
  const double clo = std::cos(x.lo);
  const double chi = std::cos(x.hi);
  double lo = has_min ? -1.0
                      : step_down(std::min(clo, chi), detail::kTranscUlps);
  double hi = has_max ? 1.0
                      : step_up(std::max(clo, chi), detail::kTranscUlps);
  return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

inline Interval itanh(Interval x) {
  // monotone
  double lo = step_down(std::tanh(x.lo), detail::kTranscUlps);
  double hi = step_up(std::tanh(x.hi), detail::kTranscUlps);
  return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

// Axis-aligned box: one interval per state variable.
struct Box {
  std::vector<Interval> dims;

  Box() = default;
  explicit Box(std::vector<Interval> d) : dims(std::move(d)) {}

  // [-r, r]^n
  static Box cube(int n, double r) {
    return Box(std::vector<Interval>(static_cast<std::size_t>(n),
                                     Interval{-r, r}));
  }

  int dim() const { return static_cast<int>(dims.size()); }

  double max_width() const {
    double w = 0.0;
    for (const auto &iv : dims) w = std::max(w, iv.width());
    return w;
  }

  int widest_dim() const {
    int best = 0;
    double w = -1.0;
    for (int i = 0; i < dim(); ++i) {
      if (dims[static_cast<std::size_t>(i)].width() > w) {
        w = dims[static_cast<std::size_t>(i)].width();
        best = i;
      }
    }
    return best;
  }

  std::vector<double> midpoint() const {
    std::vector<double> m(dims.size());
    for (std::size_t i = 0; i < dims.size(); ++i) m[i] = dims[i].mid();
    return m;
  }

  bool contains(const std::vector<double> &x) const {
    if (x.size() != dims.size()) return false;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (!dims[i].contains(x[i])) return false;
    }
    return true;
  }

  std::pair<Box, Box> split(int d) const {
    Box left = *this;
    Box right = *this;
    const Interval &iv = dims[static_cast<std::size_t>(d)];
    const double m = iv.mid();
    left.dims[static_cast<std::size_t>(d)] = {iv.lo, m};
    right.dims[static_cast<std::size_t>(d)] = {m, iv.hi};
    return {std::move(left), std::move(right)};
  }
};

} // namespace lyap

#endif // LYAPCERT_INTERVAL_HPP
