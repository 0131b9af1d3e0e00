// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/kg.hpp"

#include <cmath>

namespace cliffbundle {

namespace {

void check_mass(double m) {
  if (!(m > 0.0)) throw InvalidArgument("two-component reduction needs m > 0");
}

void check_scalar(const LatticeState& s, const char* what) {
  if (s.comps != 1)
    throw InvalidArgument(std::string(what) + " must be single-component");
  if (s.data.rows() != 1 || s.data.cols() != s.n)
    throw DimensionMismatch("state data does not match its lattice");
}

}  // namespace

LatticeState kg_first_order(const LatticeState& phi, const LatticeState& phidot,
                            double m) {
  check_mass(m);
  check_scalar(phi, "phi");
  check_scalar(phidot, "phidot");
  if (phi.n != phidot.n || phi.dx != phidot.dx ||
      phi.periodic != phidot.periodic)
    throw DimensionMismatch("phi and phidot live on different lattices");

  LatticeState out = make_lattice_state(phi.n, phi.dx, 2, phi.periodic);
  const cx im(0.0, 1.0);
  for (int j = 0; j < phi.n; ++j) {
    const cx p = phi.data(0, j), v = phidot.data(0, j);
    out.data(0, j) = p + im / m * v;
    out.data(1, j) = p - im / m * v;
  }
  return out;
}

std::pair<LatticeState, LatticeState> kg_second_order(const LatticeState& psi,
                                                      double m) {
  check_mass(m);
  if (psi.comps != 2)
    throw InvalidArgument("two-component state expected");
  LatticeState phi = make_lattice_state(psi.n, psi.dx, 1, psi.periodic);
  LatticeState phidot = phi;
  const cx im(0.0, 1.0);
  for (int j = 0; j < psi.n; ++j) {
    const cx a = psi.data(0, j), b = psi.data(1, j);
    phi.data(0, j) = 0.5 * (a + b);
    phidot.data(0, j) = -im * (0.5 * m) * (a - b);
  }
  return {phi, phidot};
}

Trajectory kg_evolve(const LatticeState& psi0, double m, double dt,
                     int steps) {
  check_mass(m);
  if (psi0.comps != 2)
    throw InvalidArgument("two-component state expected");
  if (!psi0.periodic)
    throw InvalidArgument("spectral evolution wants a periodic lattice");
  if (steps < 1) throw InvalidArgument("need at least one step");
  if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");

  const int n = psi0.n;
  const double dx = psi0.dx;

  // dense transform; w(k, j) = exp(-2 pi i k j / n), built once
  Mat w(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      w(k, j) = std::exp(cx(0, -2.0 * kPi * double(k) * double(j) / n));

  // forward transform of both components, mode index k
  Mat hat = psi0.data * w.transpose();

  // per-mode hamiltonian data: H_k = m s3 + q_k (s3 + i s2), q_k = p_k^2 / 2m
  RVec omega(n), q(n);
  for (int k = 0; k < n; ++k) {
    const double p2 = (2.0 - 2.0 * std::cos(2.0 * kPi * k / n)) / (dx * dx);
    q(k) = p2 / (2.0 * m);
    omega(k) = std::sqrt(m * m + p2);
  }

  Trajectory out;
  out.times.reserve(steps + 1);
  out.states.reserve(steps + 1);
  out.times.push_back(0.0);
  out.states.push_back(psi0);

  Mat evolved(2, n);
  for (int s = 1; s <= steps; ++s) {
    const double t = s * dt;
    for (int k = 0; k < n; ++k) {
      const double c = std::cos(omega(k) * t);
      const cx f = cx(0, -1) * std::sin(omega(k) * t) / omega(k);
      // rows of U_k = c I + f H_k with H_k = [[m+q, q], [-q, -m-q]]
      const cx a = hat(0, k), b = hat(1, k);
      evolved(0, k) = (c + f * (m + q(k))) * a + f * q(k) * b;
      evolved(1, k) = -f * q(k) * a + (c - f * (m + q(k))) * b;
    }
    LatticeState st = make_lattice_state(n, dx, 2, true);
    st.data = evolved * w.conjugate() / double(n);
    out.times.push_back(t);
    out.states.push_back(std::move(st));
  }
  return out;
}

}  // namespace cliffbundle
