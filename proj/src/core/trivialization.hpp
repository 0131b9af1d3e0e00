// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "core/common.hpp"

namespace cliffbundle {

// Pointwise identification of the fibre over x with the fixed model fibre.
// Callbacks must be pure; l(x) and l_inv(x) must multiply to 1 to 1e-10.
struct Trivialization {
  std::string name;
  int d = 0;
  std::function<Mat(const RVec&)> l;
  std::function<Mat(const RVec&)> l_inv;
};

Trivialization identity_trivialization(int d);
Trivialization scalar_trivialization(int d, double c);

// Identity plus two smooth rank-1 bumps with total spectral norm below
// `amplitude`; amplitude < 0.5 keeps every sample invertible with cond < 3.
Trivialization random_smooth_trivialization(int d, int n_chart,
                                            std::uint64_t seed,
                                            double amplitude);

// "identity" | "scalar:{c}" | "random_smooth:{seed},{amplitude}"
Trivialization trivialization_from_config(const std::string& config, int d,
                                          int n_chart);

// checked evaluation: condition number guard at 1e12, inverse consistency
Mat triv_at(const Trivialization& l, const RVec& x);
Mat triv_inv_at(const Trivialization& l, const RVec& x);

Vec lift_state(const Trivialization& l, const RVec& x, const Vec& psi);
Vec project_state(const Trivialization& l, const RVec& x, const Vec& big_psi);
Mat conjugate_operator(const Trivialization& l, const RVec& x, const Mat& op);

}  // namespace cliffbundle
