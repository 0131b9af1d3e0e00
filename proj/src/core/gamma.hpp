// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace cliffbundle {

// Two metric conventions are carried side by side: "mostly-minus"
// diag(+1,-1,...) and "mostly-plus" diag(-1,+1,...). The mostly-plus
// generators are i times the mostly-minus ones, which keeps gamma^0 diagonal
// in both.
enum class Convention { MostlyMinus, MostlyPlus };

Convention parse_convention(const std::string& s);  // "mm"/"mostly-minus"/...
const char* convention_name(Convention c);

struct MatrixRep {
  int n = 0;                 // spacetime dimension (generator count)
  Convention conv = Convention::MostlyMinus;
  RVec metric_diag;          // eta_{mu mu}, length n
  std::vector<Mat> gamma;    // lower-index generators, d x d

  int d() const { return gamma.empty() ? 0 : int(gamma[0].rows()); }
};

// standard Dirac basis, 4x4, diagonal gamma^0 block form
MatrixRep dirac_gammas(Convention conv);
// 1+1-dimensional reduction, 2x2
MatrixRep dirac_gammas_1p1(Convention conv);

// gamma^mu = g^{mu nu} gamma_nu for the rep's own diagonal metric
std::vector<Mat> dual_gammas(const MatrixRep& rep);
// same, against an explicit symmetric invertible metric
std::vector<Mat> dual_gammas(const MatrixRep& rep, const RMat& g);

// rho(A) = diag(A, (A^dagger)^-1); requires |det A - 1| <= 1e-10
Mat sl2c_embed(const Mat& a);

// (1/4)[gamma_mu, gamma_nu]
Mat spin_generator(const MatrixRep& rep, int mu, int nu);

// exp(angle * (1/4)[gamma_j, gamma_k]) for spatial j != k
Mat spin_rotate(const MatrixRep& rep, int j, int k, double angle);

// general plane, boosts included (mu != nu)
Mat spin_transform(const MatrixRep& rep, int mu, int nu, double angle);

// row-major complex pairs plus metadata
std::string rep_to_json(const MatrixRep& rep);

}  // namespace cliffbundle
