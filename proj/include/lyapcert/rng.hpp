// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_RNG_HPP
#define LYAPCERT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace lyap {

// Seeded RNG with hand-mapped distributions. std::*_distribution output is
// implementation-defined, so sampling goes through fixed bit manipulation to
// keep runs reproducible across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; one draw per call, the pair partner is cached.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  // uniform over the closed euclidean ball of given radius (rejection from
  // the bounding cube)
  std::vector<double> in_ball(int dim, double radius) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    while (true) {
      double norm2 = 0.0;
      for (auto &xi : x) {
        xi = uniform(-radius, radius);
        norm2 += xi * xi;
      }
      if (norm2 <= radius * radius) return x;
    }
  }

  // uniform point on the unit sphere
  std::vector<double> on_sphere(int dim) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    while (true) {
      double norm2 = 0.0;
      for (auto &xi : x) {
        xi = gaussian();
        norm2 += xi * xi;
      }
      if (norm2 > 1e-24) {
        double inv = 1.0 / std::sqrt(norm2);
        for (auto &xi : x) xi *= inv;
        return x;
      }
    }
  }

private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

} // namespace lyap

#endif // LYAPCERT_RNG_HPP
