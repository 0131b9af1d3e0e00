// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

#include "core/common.hpp"

namespace cliffbundle {

// Deterministic random source. The generator (mt19937_64) and the transforms
// below are fixed by name so two builds of this code base produce identical
// streams for the same seed; std::*_distribution is avoided on purpose since
// its output differs across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static const char* algorithm() { return "mt19937_64+box-muller"; }

  std::uint64_t raw() { return eng_(); }

  // uniform on [0, 1), 53-bit resolution
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller; second member of each pair is cached
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  cx cnormal() {
    const double re = normal();
    const double im = normal();
    return cx(re, im);
  }

  std::uint64_t below(std::uint64_t n);  // uniform integer in [0, n)

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace cliffbundle
