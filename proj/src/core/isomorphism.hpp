// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/linalg.hpp"
#include "core/multivector.hpp"

namespace cliffbundle {

struct IsomorphismReport {
  int n = 0;             // generator count
  int d = 0;             // matrix dimension
  double relation_residual = 0.0;   // max ||{g_i,g_j} - 2 g_ij I||_F
  bool relations_ok = false;
  int blade_rank = 0;               // rank of the 2^n blade images
  int expected_rank = 0;            // 2^n
  bool independent = false;         // blade_rank == expected_rank
  double product_residual = 0.0;    // blade-product vs sign-table consistency
  bool products_ok = false;
  int matrix_algebra_dim = 0;       // d*d
  bool full_algebra_claimed = false;
  bool full_algebra_ok = false;     // blade span fills the whole matrix algebra
  bool passed = false;
};

// Verifies that `generators` realize the algebra: anticommutation relations
// against the diagonal metric, linear independence of all 2^n blade images,
// and (for n <= 6) agreement of matrix blade products with the sign table.
// When `claim_full_algebra` is set, additionally requires the blade images to
// span the full d x d matrix algebra.
IsomorphismReport check_matrix_isomorphism(const AlgebraSpec& spec,
                                           const std::vector<Mat>& generators,
                                           bool claim_full_algebra = false,
                                           double tol = 1e-12);

// image of a basis blade: ordered product of generator images
Mat blade_image(const std::vector<Mat>& generators, std::uint32_t blade);

}  // namespace cliffbundle
