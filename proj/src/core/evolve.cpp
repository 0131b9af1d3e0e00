// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/evolve.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "core/geometry.hpp"
#include "core/linalg.hpp"

namespace cliffbundle {

namespace {

void check_state(const LatticeState& s) {
  if (s.n < 3) throw InvalidArgument("lattice needs at least 3 sites");
  if (s.comps < 1) throw InvalidArgument("state needs at least one component");
  if (s.data.rows() != s.comps || s.data.cols() != s.n)
    throw DimensionMismatch("state data does not match its lattice");
  if (!s.data.allFinite()) throw InvalidArgument("state holds non-finite values");
}

RVec site_potential(const RVec& a, int n, const char* what) {
  if (a.size() == 0) return RVec::Zero(n);
  if (a.size() != n)
    throw DimensionMismatch(std::string(what) +
                            " potential does not match the lattice");
  return a;
}

// central difference matrix with periodic wrap
RMat central_difference(int n, double dx) {
  RMat d = RMat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    d(j, (j + 1) % n) += 1.0 / (2.0 * dx);
    d(j, (j + n - 1) % n) -= 1.0 / (2.0 * dx);
  }
  return d;
}

}  // namespace

double LatticeState::norm() const {
  return std::sqrt(data.squaredNorm() * dx);
}

Vec LatticeState::flat() const {
  Vec v(std::size_t(n) * comps);
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < comps; ++c) v(j * comps + c) = data(c, j);
  return v;
}

LatticeState make_lattice_state(int n, double dx, int comps, bool periodic) {
  if (n < 3) throw InvalidArgument("lattice needs at least 3 sites");
  if (!(dx > 0.0)) throw InvalidArgument("lattice spacing must be positive");
  if (comps < 1) throw InvalidArgument("state needs at least one component");
  LatticeState s;
  s.n = n;
  s.dx = dx;
  s.comps = comps;
  s.periodic = periodic;
  s.data = Mat::Zero(comps, n);
  return s;
}

LatticeState state_from_flat(const Vec& v, int n, double dx, int comps,
                             bool periodic) {
  LatticeState s = make_lattice_state(n, dx, comps, periodic);
  if (v.size() != Eigen::Index(n) * comps)
    throw DimensionMismatch("flat vector does not match the lattice");
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < comps; ++c) s.data(c, j) = v(j * comps + c);
  return s;
}

EvolveResult time_ordered_evolve(const std::function<Mat(double)>& h,
                                 const Vec& psi0, double t0, double t1,
                                 int steps, double hbar) {
  if (!h) throw InvalidArgument("no hamiltonian callback");
  if (steps < 1) throw InvalidArgument("need at least one step");
  if (!(t1 > t0)) throw InvalidArgument("time interval is degenerate");
  if (!(hbar > 0.0)) throw InvalidArgument("hbar must be positive");

  const double dt = (t1 - t0) / steps;
  const int d = int(psi0.size());
  EvolveResult out;
  out.u = Mat::Identity(d, d);
  for (int i = 0; i < steps; ++i) {
    Mat hm = h(t0 + (i + 0.5) * dt);
    if (hm.rows() != d || hm.cols() != d)
      throw DimensionMismatch("hamiltonian does not act on the state");
    if (hermiticity_residual(hm) > 1e-10 * std::max(1.0, frob(hm)))
      throw InvalidArgument("hamiltonian is not hermitian");
    out.u = expm(cx(0, -dt / hbar) * hm) * out.u;
  }
  out.psi = out.u * psi0;
  return out;
}

Mat dirac_hamiltonian_1p1(int n, double dx, const EvolutionConfig& cfg) {
  if (n < 3) throw InvalidArgument("lattice needs at least 3 sites");
  if (!(dx > 0.0)) throw InvalidArgument("lattice spacing must be positive");
  if (!(cfg.hbar > 0.0)) throw InvalidArgument("hbar must be positive");
  const RVec a0 = site_potential(cfg.a0, n, "scalar");
  const RVec ax = site_potential(cfg.ax, n, "vector");

  // raised-index products: alpha = gamma^0 gamma^1, beta = gamma^0
  MatrixRep rep = dirac_gammas_1p1(Convention::MostlyMinus);
  Mat alpha = rep.metric_diag(0) * rep.metric_diag(1) * rep.gamma[0] *
              rep.gamma[1];                          // -sigma_1, hermitian
  Mat beta = rep.metric_diag(0) * rep.gamma[0];      // sigma_3

  Mat hm = kron(Mat(cx(0, -cfg.hbar) * central_difference(n, dx).cast<cx>()),
                alpha);
  Mat diag_a0 = Mat::Zero(n, n), diag_ax = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    diag_a0(j, j) = cfg.e * a0(j);
    diag_ax(j, j) = -cfg.e * ax(j);
  }
  hm += kron(diag_ax, alpha);
  hm += kron(Mat(Mat::Identity(n, n)), Mat(cfg.m * beta));
  hm += kron(diag_a0, Mat(Mat::Identity(2, 2)));
  return hm;
}

Trajectory dirac_evolve_1p1(const LatticeState& psi0,
                            const EvolutionConfig& cfg) {
  check_state(psi0);
  if (psi0.comps != 2)
    throw InvalidArgument("1+1 dirac evolution wants 2-component spinors");
  if (!psi0.periodic)
    throw InvalidArgument("1+1 dirac evolution wants a periodic lattice");
  if (cfg.steps < 1) throw InvalidArgument("need at least one step");
  if (!(cfg.dt > 0.0)) throw InvalidArgument("time step must be positive");

  const RVec a0 = site_potential(cfg.a0, psi0.n, "scalar");
  const RVec ax = site_potential(cfg.ax, psi0.n, "vector");
  const double bound = cfg.hbar / psi0.dx + std::abs(cfg.m) +
                       std::abs(cfg.e) * (a0.cwiseAbs().maxCoeff() +
                                          ax.cwiseAbs().maxCoeff());
  if (cfg.dt * bound >= 0.5)
    throw StabilityError("time step too large for the spectral radius");

  Mat hm = dirac_hamiltonian_1p1(psi0.n, psi0.dx, cfg);
  Eigen::SelfAdjointEigenSolver<Mat> es(hm);
  if (es.info() != Eigen::Success)
    throw StabilityError("hamiltonian eigendecomposition failed");

  const Vec coef = es.eigenvectors().adjoint() * psi0.flat();
  Trajectory out;
  out.times.reserve(cfg.steps + 1);
  out.states.reserve(cfg.steps + 1);
  out.times.push_back(0.0);
  out.states.push_back(psi0);
  Vec phase(coef.size());
  for (int s = 1; s <= cfg.steps; ++s) {
    const double t = s * cfg.dt;
    for (Eigen::Index k = 0; k < coef.size(); ++k)
      phase(k) = std::exp(cx(0, -es.eigenvalues()(k) * t / cfg.hbar)) * coef(k);
    out.times.push_back(t);
    out.states.push_back(state_from_flat(es.eigenvectors() * phase, psi0.n,
                                         psi0.dx, psi0.comps));
  }
  return out;
}

Mat momentum_operator(int n, double dx, const MatrixRep& rep,
                      const ChartMetric& m, bool periodic, double t0,
                      double x0) {
  if (!periodic)
    throw InvalidArgument("momentum operator needs a periodic lattice");
  if (n < 3) throw InvalidArgument("lattice needs at least 3 sites");
  if (!(dx > 0.0)) throw InvalidArgument("lattice spacing must be positive");
  if (m.n != 2) throw InvalidArgument("momentum operator wants a 1+1 chart");
  if (rep.n != 2 || rep.metric_diag.size() != 2)
    throw SignatureMismatch("gamma rep does not act on a 1+1 chart");
  const bool same = (rep.metric_diag - m.frame_eta).cwiseAbs().maxCoeff() == 0;
  const bool flipped =
      (rep.metric_diag + m.frame_eta).cwiseAbs().maxCoeff() == 0;
  if (!same && !flipped)
    throw SignatureMismatch("gamma rep metric does not match the chart frame");

  // flat iff the metric is constant across the sampled sites
  bool flat = true;
  for (int j = 0; j < n && flat; j += std::max(1, n / 8)) {
    RVec x(2);
    x << t0, x0 + j * dx;
    std::vector<RMat> dg;
    if (m.has_dg())
      dg = m.dg(x);
    else {
      dg.clear();
      for (int mu = 0; mu < 2; ++mu) {
        RVec xp = x, xm = x;
        xp(mu) += 1e-4;
        xm(mu) -= 1e-4;
        dg.push_back((m.g(xp) - m.g(xm)) / 2e-4);
      }
    }
    for (const RMat& d : dg)
      if (d.cwiseAbs().maxCoeff() > 1e-12) flat = false;
  }

  const int d = rep.d();
  const RMat dcen = central_difference(n, dx);
  Mat op = Mat::Zero(Eigen::Index(n) * d, Eigen::Index(n) * d);
  MatrixRep frame = flat ? rep : frame_rep_for(m);
  for (int j = 0; j < n; ++j) {
    RVec x(2);
    x << t0, x0 + j * dx;
    Vierbein vb = vierbein_at(m, x);
    RMat einv = vb.e.inverse();
    Mat gx = Mat::Zero(d, d);  // spatial coordinate gamma, raised
    for (int a = 0; a < 2; ++a)
      gx += einv(1, a) * rep.metric_diag(a) * rep.gamma[a];

    for (int k = 0; k < n; ++k)
      if (dcen(j, k) != 0.0)
        op.block(j * d, k * d, d, d) += cx(0, -dcen(j, k)) * gx;

    if (!flat) {
      // lowered connection coefficients are convention independent; raise
      // them with the caller's own metric signs
      SpinConnection sc = spin_connection_at(m, x, frame);
      Mat om = Mat::Zero(d, d);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Mat ga = rep.metric_diag(a) * rep.gamma[a];
          Mat gb = rep.metric_diag(b) * rep.gamma[b];
          om += 0.125 * sc.omega[1](a, b) * (ga * gb - gb * ga);
        }
      op.block(j * d, j * d, d, d) += cx(0, -1) * gx * om;
    }
  }
  return op;
}

cx dirac_pairing(const LatticeState& a, const LatticeState& b,
                 const MatrixRep& rep) {
  check_state(a);
  check_state(b);
  if (a.n != b.n || a.comps != b.comps)
    throw DimensionMismatch("states live on different lattices");
  if (a.comps != rep.d())
    throw DimensionMismatch("gamma rep does not act on the state");
  cx s = 0.0;
  for (int j = 0; j < a.n; ++j)
    s += (a.data.col(j).adjoint() * rep.gamma[0] * b.data.col(j))(0, 0);
  return s * a.dx;
}

cx dirac_expectation(const Mat& op, const LatticeState& s,
                     const MatrixRep& rep) {
  check_state(s);
  const Vec v = s.flat();
  if (op.rows() != v.size() || op.cols() != v.size())
    throw DimensionMismatch("operator does not act on the state");
  Vec w = op * v;
  return dirac_pairing(s, state_from_flat(w, s.n, s.dx, s.comps), rep);
}

double dirac_hermiticity_residual(const Mat& op, int n, const MatrixRep& rep) {
  const int d = rep.d();
  if (op.rows() != Eigen::Index(n) * d || op.cols() != op.rows())
    throw DimensionMismatch("operator does not match the lattice");
  Mat g = kron(Mat(Mat::Identity(n, n)), rep.gamma[0]) * op;
  return (g - g.adjoint()).cwiseAbs().maxCoeff();
}

SpinVector spin_vector_assemble(const Mat& h, const std::vector<Mat>& p,
                                const MatrixRep& rep) {
  const int d = rep.d();
  if (int(p.size()) != rep.n - 1)
    throw DimensionMismatch("one spatial momentum per spatial axis");
  if (h.rows() != h.cols() || h.rows() % d != 0)
    throw DimensionMismatch("operator space is not a spinor bundle");
  const int k = int(h.rows()) / d;
  const Mat idk = Mat::Identity(k, k);

  SpinVector out;
  out.comps.reserve(p.size() + 1);
  out.comps.push_back(h * kron(idk, Mat(rep.metric_diag(0) * rep.gamma[0])));
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].rows() != h.rows() || p[j].cols() != h.cols())
      throw DimensionMismatch("momentum blocks do not match the hamiltonian");
    const int mu = int(j) + 1;
    out.comps.push_back(
        p[j] * kron(idk, Mat(rep.metric_diag(mu) * rep.gamma[mu])));
  }
  out.aggregate = Mat::Zero(h.rows(), h.cols());
  for (const Mat& c : out.comps) out.aggregate += c;
  return out;
}

Mat stress_energy_contract(const RMat& t, const MatrixRep& rep) {
  if (t.rows() != rep.n || t.cols() != rep.n)
    throw DimensionMismatch("tensor does not match the gamma rep");
  const int d = rep.d();
  Mat out = Mat::Zero(d, d);
  for (int mu = 0; mu < rep.n; ++mu)
    for (int nu = 0; nu < rep.n; ++nu) {
      if (t(mu, nu) == 0.0) continue;
      out += t(mu, nu) * rep.gamma[mu] * rep.gamma[nu];
    }
  return out;
}

RMat lorentz_boost(int n, double chi) {
  if (n < 2) throw InvalidArgument("boost wants at least two axes");
  RMat l = RMat::Identity(n, n);
  l(0, 0) = std::cosh(chi);
  l(1, 1) = std::cosh(chi);
  l(0, 1) = std::sinh(chi);
  l(1, 0) = std::sinh(chi);
  return l;
}

}  // namespace cliffbundle
