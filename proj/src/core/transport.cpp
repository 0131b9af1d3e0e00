// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/transport.hpp"

#include <algorithm>
#include <cmath>

#include "core/linalg.hpp"

namespace cliffbundle {

namespace {

Mat invert_or_throw(const Mat& m, const char* what) {
  Eigen::FullPivLU<Mat> lu(m);
  if (!lu.isInvertible()) throw SingularOperator(what);
  return lu.inverse();
}

// index of the interval [times[i], times[i+1]] containing t
int interval_of(const std::vector<double>& times, double t) {
  auto it = std::upper_bound(times.begin(), times.end(), t);
  int i = int(it - times.begin()) - 1;
  return std::clamp(i, 0, int(times.size()) - 2);
}

}  // namespace

void validate_path(const PathSpec& path) {
  if (!path.gamma) throw InvalidArgument("path has no chart map");
  if (!(path.t1 > path.t0)) throw InvalidArgument("path domain is degenerate");
  if (path.samples < 2) throw InvalidArgument("path needs at least 2 samples");
}

std::vector<double> path_times(const PathSpec& path) {
  validate_path(path);
  std::vector<double> t(path.samples);
  const double h = (path.t1 - path.t0) / (path.samples - 1);
  for (int i = 0; i < path.samples; ++i) t[i] = path.t0 + i * h;
  t.back() = path.t1;
  return t;
}

Mat TransportOperator::U(double t, double s) const {
  const double span = times.back() - times.front();
  const double slack = 1e-12 * std::max(1.0, std::abs(span));
  if (t < times.front() - slack || t > times.back() + slack ||
      s < times.front() - slack || s > times.back() + slack)
    throw InvalidArgument("transport evaluated outside its domain");
  if (t == s) return Mat::Identity(d, d);

  const double node_tol = 1e-9 * std::max(1.0, std::abs(span));
  auto node_index = [&](double x) -> int {
    int i = interval_of(times, x);
    if (std::abs(x - times[i]) <= node_tol) return i;
    if (std::abs(x - times[i + 1]) <= node_tol) return i + 1;
    return -1;
  };

  Mat left, right;
  if (int i = node_index(t); i >= 0) {
    left = b[i];
  } else {
    if (!refine)
      throw InvalidArgument("transport is only sampled at its grid times");
    const int j = interval_of(times, t);
    left = refine(t, times[j], j) * b[j];
  }
  if (int i = node_index(s); i >= 0) {
    right = binv[i];
  } else {
    if (!refine)
      throw InvalidArgument("transport is only sampled at its grid times");
    const int k = interval_of(times, s);
    right = binv[k] * invert_or_throw(refine(s, times[k], k),
                                      "transport factor is singular");
  }
  return left * right;
}

TransportOperator transport_from_factors(const std::vector<double>& times,
                                         const std::vector<Mat>& factors) {
  if (times.size() < 2)
    throw InvalidArgument("transport needs at least 2 sample times");
  if (factors.size() + 1 != times.size())
    throw DimensionMismatch("one factor per step is required");
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i + 1] > times[i]))
      throw InvalidArgument("transport times must increase strictly");

  TransportOperator u;
  u.times = times;
  u.d = int(factors.front().rows());
  u.b.reserve(times.size());
  u.binv.reserve(times.size());
  u.b.push_back(Mat::Identity(u.d, u.d));
  u.binv.push_back(Mat::Identity(u.d, u.d));
  for (const Mat& f : factors) {
    if (f.rows() != u.d || f.cols() != u.d)
      throw DimensionMismatch("transport factors have mixed shapes");
    u.b.push_back(f * u.b.back());
    u.binv.push_back(u.binv.back() *
                     invert_or_throw(f, "transport factor is singular"));
  }
  return u;
}

TransportOperator evolution_transport(
    const std::function<Mat(double, double)>& hilbert_u,
    const Trivialization& l, const PathSpec& path) {
  if (!hilbert_u) throw InvalidArgument("no hilbert evolution callback");
  validate_path(path);
  const std::vector<double> t = path_times(path);

  Mat id_check = hilbert_u(path.t0, path.t0);
  if ((id_check - Mat::Identity(id_check.rows(), id_check.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-10)
    throw InvalidArgument("hilbert evolution violates U(s,s) = 1");

  auto lifted = [hilbert_u, l, gamma = path.gamma](double a, double b) {
    return Mat(triv_inv_at(l, gamma(a)) * hilbert_u(a, b) *
               triv_at(l, gamma(b)));
  };
  std::vector<Mat> factors;
  factors.reserve(t.size() - 1);
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    factors.push_back(lifted(t[i + 1], t[i]));

  TransportOperator u = transport_from_factors(t, factors);
  u.refine = [lifted](double a, double b, int) { return lifted(a, b); };
  return u;
}

TransportOperator transport_from_hamiltonian(
    const std::function<Mat(double)>& h, double hbar, double t0, double t1,
    int steps) {
  if (!h) throw InvalidArgument("no hamiltonian callback");
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  if (!(t1 > t0)) throw InvalidArgument("time interval is degenerate");
  if (steps < 1) throw InvalidArgument("need at least one step");

  const double dt = (t1 - t0) / steps;
  std::vector<double> times(steps + 1);
  std::vector<Mat> mids(steps);
  std::vector<Mat> factors(steps);
  for (int i = 0; i <= steps; ++i) times[i] = t0 + i * dt;
  times.back() = t1;
  for (int i = 0; i < steps; ++i) {
    mids[i] = h(0.5 * (times[i] + times[i + 1]));
    factors[i] = expm(cx(0, -dt / hbar) * mids[i]);
  }
  TransportOperator u = transport_from_factors(times, factors);
  u.refine = [mids, hbar](double a, double b, int k) {
    return expm(cx(0, -(a - b) / hbar) * mids[std::size_t(k)]);
  };
  return u;
}

Mat connection_from_transport(const TransportOperator& u, double s,
                              double eps) {
  if (eps < 0.0) eps = 1e-4 * (u.t1() - u.t0());
  if (!(eps > 0.0)) throw InvalidArgument("derivative step is degenerate");
  if (s - eps < u.t0() || s + eps > u.t1())
    throw InvalidArgument("derivative stencil leaves the transport domain");
  Mat up = u.U(s, s + eps);
  Mat um = u.U(s, s - eps);
  // refuse the estimate when the transport bends too fast across the stencil
  if (frob(up - 2.0 * Mat::Identity(u.d, u.d) + um) > 0.5)
    throw StabilityError("transport curvature is too large for this step");
  return (up - um) / (2.0 * eps);
}

Mat hamiltonian_from_transport(const TransportOperator& u, double hbar,
                               double t, double eps) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  if (eps < 0.0) eps = 1e-4 * (u.t1() - u.t0());
  if (!(eps > 0.0)) throw InvalidArgument("derivative step is degenerate");
  if (t - eps < u.t0() || t + eps > u.t1())
    throw InvalidArgument("derivative stencil leaves the transport domain");
  Mat du = (u.U(t + eps, u.t0()) - u.U(t - eps, u.t0())) / (2.0 * eps);
  return cx(0, hbar) * du * u.U(u.t0(), t);
}

Mat connection_of_hamiltonian(const Mat& h, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  return cx(0, 1.0 / hbar) * h;
}

Mat hamiltonian_of_connection(const Mat& g, double hbar) {
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  return cx(0, -hbar) * g;
}

SectionAlongPath lift_section(const std::function<Vec(double)>& psi_of_t,
                              const Trivialization& l, const PathSpec& path) {
  if (!psi_of_t) throw InvalidArgument("no state callback");
  SectionAlongPath s;
  s.times = path_times(path);
  s.values.reserve(s.times.size());
  for (double t : s.times)
    s.values.push_back(lift_state(l, path.gamma(t), psi_of_t(t)));
  return s;
}

Vec section_value(const SectionAlongPath& s, double t) {
  if (s.times.size() < 2 || s.times.size() != s.values.size())
    throw InvalidArgument("section is not properly sampled");
  const double slack = 1e-12 * std::max(1.0, s.times.back() - s.times.front());
  if (t < s.times.front() - slack || t > s.times.back() + slack)
    throw InvalidArgument("section evaluated outside its domain");
  const int i = interval_of(s.times, t);
  const double w = (t - s.times[i]) / (s.times[i + 1] - s.times[i]);
  return (1.0 - w) * s.values[i] + w * s.values[i + 1];
}

Vec path_derivation(const SectionAlongPath& lam, const TransportOperator& u,
                    double s, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("derivation step is degenerate");
  double max_gap = 0.0;
  for (std::size_t i = 0; i + 1 < lam.times.size(); ++i)
    max_gap = std::max(max_gap, lam.times[i + 1] - lam.times[i]);
  if (eps > max_gap * (1.0 + 1e-9))
    throw InvalidArgument("derivation step exceeds the section sample spacing");
  Vec ahead = section_value(lam, s + eps);
  Vec here = section_value(lam, s);
  return (u.U(s, s + eps) * ahead - here) / eps;
}

Vec path_derivation_local(const SectionAlongPath& lam,
                          const TransportOperator& u, double s, double eps) {
  Mat g = connection_from_transport(u, s, eps);
  Vec here = section_value(lam, s);
  Vec dlam = (section_value(lam, s + eps) - here) / eps;
  return dlam + g * here;
}

}  // namespace cliffbundle
