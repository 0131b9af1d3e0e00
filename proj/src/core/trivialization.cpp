// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/trivialization.hpp"

#include <cmath>
#include <vector>

#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace cliffbundle {

namespace {

constexpr double kCondGuard = 1e12;

void check_square(const Mat& m, int d, const char* what) {
  if (m.rows() != d || m.cols() != d)
    throw DimensionMismatch(std::string(what) +
                            ": fibre matrix has the wrong shape");
}

}  // namespace

Trivialization identity_trivialization(int d) {
  if (d < 1) throw InvalidArgument("fibre dimension must be positive");
  Trivialization t;
  t.name = "identity";
  t.d = d;
  t.l = [d](const RVec&) { return Mat(Mat::Identity(d, d)); };
  t.l_inv = t.l;
  return t;
}

Trivialization scalar_trivialization(int d, double c) {
  if (d < 1) throw InvalidArgument("fibre dimension must be positive");
  if (c == 0.0) throw InvalidArgument("scalar trivialization needs c != 0");
  Trivialization t;
  t.name = "scalar:" + std::to_string(c);
  t.d = d;
  t.l = [d, c](const RVec&) { return Mat(c * Mat::Identity(d, d)); };
  t.l_inv = [d, c](const RVec&) { return Mat(Mat::Identity(d, d) / c); };
  return t;
}

Trivialization random_smooth_trivialization(int d, int n_chart,
                                            std::uint64_t seed,
                                            double amplitude) {
  if (d < 1 || n_chart < 1)
    throw InvalidArgument("fibre and chart dimensions must be positive");
  if (!(amplitude >= 0.0) || amplitude >= 0.5)
    throw InvalidArgument("random_smooth amplitude must lie in [0, 0.5)");

  struct Bump {
    Vec u, v;
    RVec k;
    double phase;
  };
  Rng rng(seed);
  std::vector<Bump> bumps(2);
  for (Bump& b : bumps) {
    b.u = Vec(d);
    b.v = Vec(d);
    for (int i = 0; i < d; ++i) b.u(i) = rng.cnormal();
    for (int i = 0; i < d; ++i) b.v(i) = rng.cnormal();
    b.u.normalize();
    b.v.normalize();
    b.k = RVec(n_chart);
    for (int i = 0; i < n_chart; ++i) b.k(i) = rng.uniform(-1.0, 1.0);
    b.phase = rng.uniform(0.0, 2.0 * kPi);
  }

  auto value = [d, n_chart, amplitude, bumps](const RVec& x) {
    if (x.size() != n_chart)
      throw DimensionMismatch("trivialization sampled off its chart");
    Mat m = Mat::Identity(d, d);
    for (const Bump& b : bumps)
      m += 0.5 * amplitude * std::sin(b.k.dot(x) + b.phase) *
           (b.u * b.v.adjoint());
    return m;
  };
  Trivialization t;
  t.name = "random_smooth:" + std::to_string(seed) + "," +
           std::to_string(amplitude);
  t.d = d;
  t.l = value;
  t.l_inv = [value](const RVec& x) {
    Eigen::FullPivLU<Mat> lu(value(x));
    if (!lu.isInvertible())
      throw SingularOperator("trivialization is singular at the sample point");
    return Mat(lu.inverse());
  };
  return t;
}

Trivialization trivialization_from_config(const std::string& config, int d,
                                          int n_chart) {
  try {
    if (config == "identity") return identity_trivialization(d);
    if (config.rfind("scalar:", 0) == 0)
      return scalar_trivialization(d, std::stod(config.substr(7)));
    if (config.rfind("random_smooth:", 0) == 0) {
      const std::string body = config.substr(14);
      const auto comma = body.find(',');
      if (comma == std::string::npos)
        throw ParseError("random_smooth wants seed,amplitude");
      const auto seed = std::stoull(body.substr(0, comma));
      const double amp = std::stod(body.substr(comma + 1));
      return random_smooth_trivialization(d, n_chart, seed, amp);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed trivialization config: " + config);
  }
  throw ParseError("unrecognized trivialization config: " + config);
}

Mat triv_at(const Trivialization& l, const RVec& x) {
  if (!l.l) throw InvalidArgument("trivialization has no forward callback");
  Mat m = l.l(x);
  check_square(m, l.d, "trivialization");
  if (cond2(m) > kCondGuard)
    throw SingularOperator("trivialization is ill conditioned at the point");
  return m;
}

Mat triv_inv_at(const Trivialization& l, const RVec& x) {
  if (!l.l_inv) throw InvalidArgument("trivialization has no inverse callback");
  Mat m = l.l_inv(x);
  check_square(m, l.d, "trivialization inverse");
  Mat fwd = triv_at(l, x);
  if ((fwd * m - Mat::Identity(l.d, l.d)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("l_inv is not the inverse of l at the point");
  return m;
}

Vec lift_state(const Trivialization& l, const RVec& x, const Vec& psi) {
  if (psi.size() != l.d)
    throw DimensionMismatch("state does not live in the model fibre");
  return triv_inv_at(l, x) * psi;
}

Vec project_state(const Trivialization& l, const RVec& x, const Vec& big_psi) {
  if (big_psi.size() != l.d)
    throw DimensionMismatch("state does not live in the model fibre");
  return triv_at(l, x) * big_psi;
}

Mat conjugate_operator(const Trivialization& l, const RVec& x, const Mat& op) {
  check_square(op, l.d, "conjugate_operator");
  return triv_inv_at(l, x) * op * triv_at(l, x);
}

}  // namespace cliffbundle
