// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "core/common.hpp"
#include "core/rng.hpp"

namespace cliffbundle {

// Matrix exponential by scaling-and-squaring with a degree-13 Pade
// approximant. Accurate to ~1e-13 in unit norm for well-scaled inputs.
Mat expm(const Mat& a);

double frob(const Mat& a);
double norm1(const Mat& a);  // max column sum

// ||A - A^dagger||_F
double hermiticity_residual(const Mat& a);

// 2-norm condition number via SVD; intended for small dense matrices
double cond2(const Mat& a);

// numerical rank of the column span, column-pivoted QR with relative
// threshold `rtol` against the largest pivot
int column_rank(const Mat& a, double rtol = 1e-10);

Mat kron(const Mat& a, const Mat& b);

// seeded random matrices (entries from Rng, deterministic)
Mat random_complex(Rng& rng, int rows, int cols, double scale = 1.0);
Mat random_hermitian(Rng& rng, int d, double scale = 1.0);
Mat random_unitary(Rng& rng, int d);  // Haar-like: QR with phase-fixed R

}  // namespace cliffbundle
