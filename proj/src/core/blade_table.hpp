// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/common.hpp"

namespace cliffbundle {

// Real Clifford algebra signature: the first p generators square to +1, the
// remaining q to -1.
struct Signature {
  int p = 0;
  int q = 0;
  int n() const { return p + q; }
  int metric_sign(int i) const { return i < p ? +1 : -1; }
  bool operator==(const Signature& o) const { return p == o.p && q == o.q; }
};

// Basis blades are bitmasks over generators; bit i set means e_i is a factor,
// factors ordered by ascending index. Product signs come from counting the
// transpositions that interleave two sorted factor lists, then folding in the
// metric sign of every repeated generator.
class BladeTable {
 public:
  static constexpr int kMaxN = 12;  // 2^24 sign entries; hard capacity cap

  explicit BladeTable(Signature sig);

  const Signature& signature() const { return sig_; }
  int n() const { return sig_.n(); }
  std::uint32_t blade_count() const { return std::uint32_t(1) << n(); }

  // sign of e_a * e_b in the canonical blade basis; the result blade is a^b
  int sign(std::uint32_t a, std::uint32_t b) const {
    return table_[(std::size_t(a) << n()) | b];
  }

  static int grade(std::uint32_t blade) {
    return std::popcount(blade);
  }

  // direct computation, independent of the stored table
  static int compute_sign(Signature sig, std::uint32_t a, std::uint32_t b);

 private:
  Signature sig_;
  std::vector<std::int8_t> table_;
};

using BladeTablePtr = std::shared_ptr<const BladeTable>;

}  // namespace cliffbundle
