// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/blade_table.hpp"

#include <bit>

namespace cliffbundle {

int BladeTable::compute_sign(Signature sig, std::uint32_t a, std::uint32_t b) {
  // count transpositions needed to move each factor of b past the factors
  // of a that have a larger index
  int swaps = 0;
  std::uint32_t t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  int sign = (swaps & 1) ? -1 : +1;
  // repeated generators contract to their metric sign
  std::uint32_t common = a & b;
  while (common != 0) {
    const int i = std::countr_zero(common);
    sign *= sig.metric_sign(i);
    common &= common - 1;
  }
  return sign;
}

BladeTable::BladeTable(Signature sig) : sig_(sig) {
  if (sig.p < 0 || sig.q < 0)
    throw InvalidArgument("BladeTable: signature counts must be non-negative");
  if (sig.n() < 1)
    throw InvalidArgument("BladeTable: need at least one generator");
  if (sig.n() > kMaxN)
    throw CapacityError("BladeTable: p+q exceeds the supported cap of 12");
  const std::uint32_t m = blade_count();
  table_.resize(std::size_t(m) * m);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b)
      table_[(std::size_t(a) << n()) | b] =
          static_cast<std::int8_t>(compute_sign(sig, a, b));
}

}  // namespace cliffbundle
