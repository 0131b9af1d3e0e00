// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "core/gamma.hpp"
#include "core/lattice.hpp"
#include "core/metric.hpp"

namespace cliffbundle {

// Frame field at a point: e(a, mu), frame index first. Satisfies
// e^T eta e = g. Gauge: exactly diagonal metrics keep their axis order
// (negative entries listed first) and take positive roots, so builtin charts
// get smooth frames; generic symmetric metrics go through an
// eigendecomposition with deterministic column sign fixing and are only
// guaranteed pointwise.
struct Vierbein {
  RMat e;
  RVec eta;
};

Vierbein vierbein_at(const ChartMetric& m, const RVec& x);

// c[alpha](mu, nu) = Gamma^alpha_{mu nu}, symmetric in (mu, nu)
struct Christoffel {
  int n = 0;
  std::vector<RMat> c;
  double gamma(int alpha, int mu, int nu) const { return c[alpha](mu, nu); }
};

// analytic dg when the metric carries one, else 4th-order central
// differences with step h; h below 1e-7 is rejected (cancellation)
Christoffel christoffel_at(const ChartMetric& m, const RVec& x,
                           double h = 1e-4);

// max |nabla_alpha g_{mu nu}| with derivatives at the same step
double metric_compatibility_residual(const ChartMetric& m, const RVec& x,
                                     const Christoffel& G, double h = 1e-4);

// canonical frame gammas for the chart signature: (2,0), (1,1), (3,1)
MatrixRep frame_rep_for(const ChartMetric& m);

// omega[mu](a, b) lowered and antisymmetric; a[mu] the mixed-index frame
// connection; Omega[mu] = (1/4) W^{ab}_mu gamma_a gamma_b acting on spinors
struct SpinConnection {
  std::vector<RMat> omega;
  std::vector<RMat> a;
  std::vector<Mat> Omega;
};

SpinConnection spin_connection_at(const ChartMetric& m, const RVec& x,
                                  const MatrixRep& rep, double h = 1e-4);

// max |d_mu omega_nu - d_nu omega_mu + [omega_mu, omega_nu]| entrywise,
// Richardson-extrapolated from steps h and h/2; zero for flat charts
double spin_curvature_residual(const ChartMetric& m, const RVec& x,
                               const MatrixRep& rep, double h = 1e-3);

// gamma^mu(x) = e_a^mu eta^{ab} gamma_b; {gamma^mu, gamma^nu} = 2 g^{mu nu}
std::vector<Mat> coordinate_gammas(const ChartMetric& m, const RVec& x,
                                   const MatrixRep& rep);

// covariant derivative along a sampled curve, interior points only
// (output size is psi.size() - 2)
std::vector<Vec> covariant_derivative_spinor(const std::vector<Vec>& psi,
                                             const std::vector<RVec>& xs,
                                             double dt, const ChartMetric& m,
                                             const MatrixRep& rep);

// D psi = gamma^mu(x) (d_mu + Omega_mu) psi at a lattice point, central
// differences; needs one interior layer
Vec curved_dirac_apply(const Field& psi, const ChartMetric& m,
                       const MatrixRep& rep, const std::vector<int>& idx);

// max |trace(gamma^mu gamma^nu D_mu D_nu phi)/d - LaplaceBeltrami(phi)| over
// the 2-layer interior; the flux-form stencil is independent of the gammas
double dalembert_residual(const Field& phi, const ChartMetric& m);

}  // namespace cliffbundle
