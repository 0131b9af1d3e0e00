// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/rng.hpp"

namespace cliffbundle {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below: n must be positive");
  // rejection sampling keeps the result exactly uniform
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = eng_();
  while (x >= limit) x = eng_();
  return x % n;
}

}  // namespace cliffbundle
