// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "core/evolve.hpp"

namespace cliffbundle {

// Two-component reduction of the scalar wave problem (hbar = c = 1):
//   psi_1 = phi + (i/m) dphi/dt,  psi_2 = phi - (i/m) dphi/dt
// which turns the second-order equation into i dpsi/dt = H psi with
//   H = m sigma_3 - (Lap / 2m)(sigma_3 + i sigma_2).
// The reduction needs m > 0; the massless limit has no such split.

// phi and phidot are single-component states on the same lattice
LatticeState kg_first_order(const LatticeState& phi, const LatticeState& phidot,
                            double m);

// inverse of kg_first_order: recovers (phi, phidot) exactly
std::pair<LatticeState, LatticeState> kg_second_order(const LatticeState& psi,
                                                      double m);

// Evolves the two-component state on a periodic lattice. Diagonalizes in
// Fourier space: per mode H_k squares to omega_k^2, so the step is the exact
// closed form cos(omega t) - i sin(omega t) H_k / omega. Exact in dt for the
// discrete Laplacian; the only discretization error is spatial.
Trajectory kg_evolve(const LatticeState& psi0, double m, double dt, int steps);

}  // namespace cliffbundle
