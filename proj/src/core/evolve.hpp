// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "core/common.hpp"
#include "core/gamma.hpp"
#include "core/metric.hpp"

namespace cliffbundle {

// Periodic 1D lattice of d-component spinors.  Flat layout is site-major:
// flat(j*d + c) = data(c, j).
struct LatticeState {
  int n = 0;
  double dx = 1.0;
  int comps = 1;
  bool periodic = true;
  Mat data;  // comps x n

  double norm() const;
  Vec flat() const;
};

LatticeState make_lattice_state(int n, double dx, int comps,
                                bool periodic = true);
LatticeState state_from_flat(const Vec& v, int n, double dx, int comps,
                             bool periodic = true);

// Natural units: hbar and c are 1 unless overridden here.
struct EvolutionConfig {
  double dt = 0.01;
  int steps = 1;
  double hbar = 1.0;
  double m = 0.0;
  double e = 0.0;
  RVec a0;  // scalar potential per site; empty means zero
  RVec ax;  // vector potential per site; empty means zero
};

struct EvolveResult {
  Vec psi;
  Mat u;
};

// Midpoint-rule exponential time ordering of i hbar dU/dt = H(t) U.
EvolveResult time_ordered_evolve(const std::function<Mat(double)>& h,
                                 const Vec& psi0, double t0, double t1,
                                 int steps, double hbar = 1.0);

// Dense lattice Dirac Hamiltonian alpha (-i hbar d/dx - e Ax) + beta m + e A0
// with alpha = gamma^0 gamma^1 and beta = gamma^0 in the 2-spinor basis.
Mat dirac_hamiltonian_1p1(int n, double dx, const EvolutionConfig& cfg);

struct Trajectory {
  std::vector<double> times;
  std::vector<LatticeState> states;
};

// Spectral stepping of the (time-independent) lattice Dirac Hamiltonian;
// records the state after every step, initial state first.
Trajectory dirac_evolve_1p1(const LatticeState& psi0,
                            const EvolutionConfig& cfg);

// Discretized spatial part of -i gamma^mu d_mu on a periodic lattice over the
// spatial axis of a 1+1 chart, with the spin-connection term when the chart
// is not flat.  The rep's metric must match the chart frame up to an overall
// sign (both sign conventions describe the same frame bundle).  Hermiticity
// under the pairing sum psi^dag gamma^0 phi dx is a flat-chart property.
Mat momentum_operator(int n, double dx, const MatrixRep& rep,
                      const ChartMetric& m, bool periodic = true,
                      double t0 = 0.0, double x0 = 0.0);

// sum_j a_j^dag gamma^0 b_j dx, and the expectation <a| gamma^0 op |a> dx
cx dirac_pairing(const LatticeState& a, const LatticeState& b,
                 const MatrixRep& rep);
cx dirac_expectation(const Mat& op, const LatticeState& s,
                     const MatrixRep& rep);
// || G op - (G op)^dag ||_F with G = I_n kron gamma^0
double dirac_hermiticity_residual(const Mat& op, int n, const MatrixRep& rep);

struct SpinVector {
  std::vector<Mat> comps;  // H Gamma^0, then P_j Gamma^j
  Mat aggregate;           // their sum
};

// H and P_j act on (state space) kron (spinor space); gammas are lifted with
// an identity factor and used with raised indices.
SpinVector spin_vector_assemble(const Mat& h, const std::vector<Mat>& p,
                                const MatrixRep& rep);

// sum_{mu nu} T^{mu nu} gamma_mu gamma_nu with lowered gammas
Mat stress_energy_contract(const RMat& t, const MatrixRep& rep);

// identity with [[cosh chi, sinh chi], [sinh chi, cosh chi]] in the (0,1) block
RMat lorentz_boost(int n, double chi);

}  // namespace cliffbundle
