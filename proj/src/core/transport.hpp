// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "core/common.hpp"
#include "core/trivialization.hpp"

namespace cliffbundle {

struct PathSpec {
  std::function<RVec(double)> gamma;
  double t0 = 0.0;
  double t1 = 1.0;
  int samples = 2;
};

void validate_path(const PathSpec& path);
std::vector<double> path_times(const PathSpec& path);

// Transport along a fixed path, stored as per-step factors accumulated into
// B(t_i) = U(t_i, t_0) and its inverse chain, so U(t, s) = B(t) B(s)^{-1} and
// the cocycle law holds by construction.  `refine` (optional) evaluates an
// exact factor U(a, b) for a, b inside one stored interval; without it the
// operator is defined only at its grid times.
struct TransportOperator {
  std::vector<double> times;
  std::vector<Mat> b;
  std::vector<Mat> binv;
  std::function<Mat(double, double, int)> refine;
  int d = 0;

  double t0() const { return times.front(); }
  double t1() const { return times.back(); }
  Mat U(double t, double s) const;
};

TransportOperator transport_from_factors(const std::vector<double>& times,
                                         const std::vector<Mat>& factors);

// U(t,s) = l^{-1}(gamma(t)) hilbert_u(t,s) l(gamma(s)), sampled on the path
TransportOperator evolution_transport(
    const std::function<Mat(double, double)>& hilbert_u,
    const Trivialization& l, const PathSpec& path);

// time-ordered product of midpoint-frozen exponential steps of -i H(t)/hbar
TransportOperator transport_from_hamiltonian(
    const std::function<Mat(double)>& h, double hbar, double t0, double t1,
    int steps);

// Gamma(s) = d/dt U(s, t) at t = s, by central differences
// (default eps = 1e-4 times the transport span)
Mat connection_from_transport(const TransportOperator& u, double s,
                              double eps = -1.0);

// H(t) = i hbar (d/dt U(t, t0)) U(t0, t)
Mat hamiltonian_from_transport(const TransportOperator& u, double hbar,
                               double t, double eps = -1.0);

Mat connection_of_hamiltonian(const Mat& h, double hbar);
Mat hamiltonian_of_connection(const Mat& g, double hbar);

struct SectionAlongPath {
  std::vector<double> times;  // strictly increasing, need not be uniform
  std::vector<Vec> values;
};

SectionAlongPath lift_section(const std::function<Vec(double)>& psi_of_t,
                              const Trivialization& l, const PathSpec& path);
Vec section_value(const SectionAlongPath& s, double t);  // linear interpolation

// forward quotient [U(s, s+eps) lambda(s+eps) - lambda(s)] / eps
Vec path_derivation(const SectionAlongPath& lam, const TransportOperator& u,
                    double s, double eps);
// local form d lambda / ds + Gamma(s) lambda(s); agrees with the quotient to O(eps)
Vec path_derivation_local(const SectionAlongPath& lam,
                          const TransportOperator& u, double s, double eps);

}  // namespace cliffbundle
