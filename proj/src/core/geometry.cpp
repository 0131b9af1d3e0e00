// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/geometry.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace cliffbundle {

namespace {

constexpr double kMinStep = 1e-7;  // below this central differences cancel

template <typename F>
RMat central4(const F& f, const RVec& x, int mu, double h) {
  RVec xp = x, xm = x, xpp = x, xmm = x;
  xp(mu) += h;
  xm(mu) -= h;
  xpp(mu) += 2 * h;
  xmm(mu) -= 2 * h;
  const RMat fp = f(xp), fm = f(xm), fpp = f(xpp), fmm = f(xmm);
  return (8.0 * (fp - fm) - (fpp - fmm)) / (12.0 * h);
}

bool is_diagonal(const RMat& g) {
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  for (int r = 0; r < g.rows(); ++r)
    for (int c = 0; c < g.cols(); ++c)
      if (r != c && std::abs(g(r, c)) > 1e-14 * scale) return false;
  return true;
}

std::vector<RMat> metric_partials(const ChartMetric& m, const RVec& x,
                                  double h) {
  if (m.has_dg()) return m.dg(x);
  if (!(h > 0.0)) throw InvalidArgument("christoffel: step must be positive");
  if (h < kMinStep)
    throw StabilityError("christoffel: step too small for central differences");
  std::vector<RMat> d(m.n);
  for (int mu = 0; mu < m.n; ++mu) d[mu] = central4(m.g, x, mu, h);
  return d;
}

}  // namespace

Vierbein vierbein_at(const ChartMetric& m, const RVec& x) {
  RMat g = metric_validate_at(m, x);
  const int n = m.n;
  Vierbein out;
  out.eta = m.frame_eta;
  out.e = RMat::Zero(n, n);

  if (is_diagonal(g)) {
    // stable axis order: negative entries first, original order within a sign
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
      if (g(i, i) < 0) order.push_back(i);
    for (int i = 0; i < n; ++i)
      if (g(i, i) > 0) order.push_back(i);
    for (int a = 0; a < n; ++a)
      out.e(a, order[a]) = std::sqrt(std::abs(g(order[a], order[a])));
    return out;
  }

  Eigen::SelfAdjointEigenSolver<RMat> es(g);  // eigenvalues ascending
  RMat v = es.eigenvectors();
  for (int c = 0; c < n; ++c) {
    int arg = 0;
    v.col(c).cwiseAbs().maxCoeff(&arg);
    if (v(arg, c) < 0) v.col(c) = -v.col(c);
  }
  for (int a = 0; a < n; ++a)
    out.e.row(a) = std::sqrt(std::abs(es.eigenvalues()(a))) * v.col(a).transpose();
  return out;
}

Christoffel christoffel_at(const ChartMetric& m, const RVec& x, double h) {
  RMat g = metric_validate_at(m, x);
  Eigen::FullPivLU<RMat> lu(g);
  if (!lu.isInvertible())
    throw SingularOperator("christoffel: metric is singular");
  RMat ginv = lu.inverse();
  std::vector<RMat> dg = metric_partials(m, x, h);

  Christoffel out;
  out.n = m.n;
  out.c.assign(m.n, RMat::Zero(m.n, m.n));
  for (int alpha = 0; alpha < m.n; ++alpha)
    for (int mu = 0; mu < m.n; ++mu)
      for (int nu = 0; nu < m.n; ++nu) {
        double s = 0.0;
        for (int beta = 0; beta < m.n; ++beta)
          s += ginv(alpha, beta) *
               (dg[mu](beta, nu) + dg[nu](beta, mu) - dg[beta](mu, nu));
        out.c[alpha](mu, nu) = 0.5 * s;
      }
  return out;
}

double metric_compatibility_residual(const ChartMetric& m, const RVec& x,
                                     const Christoffel& G, double h) {
  std::vector<RMat> dg = metric_partials(m, x, h);
  RMat g = m.g(x);
  double worst = 0.0;
  for (int alpha = 0; alpha < m.n; ++alpha)
    for (int mu = 0; mu < m.n; ++mu)
      for (int nu = 0; nu < m.n; ++nu) {
        double v = dg[alpha](mu, nu);
        for (int beta = 0; beta < m.n; ++beta)
          v -= G.gamma(beta, alpha, mu) * g(beta, nu) +
               G.gamma(beta, alpha, nu) * g(mu, beta);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

MatrixRep frame_rep_for(const ChartMetric& m) {
  const Signature s = m.sig;
  if (s.p == 2 && s.q == 0) {
    MatrixRep rep;
    rep.n = 2;
    rep.conv = Convention::MostlyMinus;  // label only; metric is euclidean
    rep.metric_diag = RVec::Ones(2);
    Mat g0 = Mat::Zero(2, 2), g1 = Mat::Zero(2, 2);
    g0(0, 0) = 1.0;
    g0(1, 1) = -1.0;
    g1(0, 1) = 1.0;
    g1(1, 0) = 1.0;
    rep.gamma = {g0, g1};
    return rep;
  }
  if (s.p == 1 && s.q == 1) return dirac_gammas_1p1(Convention::MostlyPlus);
  if (s.p == 3 && s.q == 1) return dirac_gammas(Convention::MostlyPlus);
  throw InvalidArgument("no canonical frame gammas for this signature");
}

SpinConnection spin_connection_at(const ChartMetric& m, const RVec& x,
                                  const MatrixRep& rep, double h) {
  if (rep.n != m.n || rep.metric_diag.size() != m.frame_eta.size() ||
      (rep.metric_diag - m.frame_eta).cwiseAbs().maxCoeff() > 0)
    throw SignatureMismatch("gamma rep metric does not match the chart frame");
  if (!(h > 0.0)) throw InvalidArgument("spin connection: step must be positive");
  if (h < kMinStep)
    throw StabilityError("spin connection: step too small for differences");

  const int n = m.n;
  auto einv = [&m](const RVec& y) -> RMat {
    return vierbein_at(m, y).e.inverse();
  };
  Vierbein vb = vierbein_at(m, x);
  RMat einv_x = vb.e.inverse();
  Christoffel G = christoffel_at(m, x, h);
  RMat eta = m.frame_eta.asDiagonal();

  SpinConnection out;
  out.omega.resize(n);
  out.a.resize(n);
  out.Omega.resize(n);
  const int d = rep.d();
  for (int mu = 0; mu < n; ++mu) {
    RMat deinv = central4(einv, x, mu, h);
    RMat gmu(n, n);  // Gamma^nu_{mu sigma}
    for (int nu = 0; nu < n; ++nu)
      for (int sig = 0; sig < n; ++sig) gmu(nu, sig) = G.gamma(nu, mu, sig);
    RMat a = vb.e * (deinv + gmu * einv_x);
    RMat w = a * eta;                  // both frame indices up
    w = 0.5 * (w - w.transpose());     // metric compatibility makes this small
    out.a[mu] = w * eta;               // antisymmetrized mixed form
    out.omega[mu] = eta * w * eta;     // both down
    Mat om = Mat::Zero(d, d);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (w(p, q) != 0.0) om += 0.25 * w(p, q) * rep.gamma[p] * rep.gamma[q];
    out.Omega[mu] = om;
  }
  return out;
}

double spin_curvature_residual(const ChartMetric& m, const RVec& x,
                               const MatrixRep& rep, double h) {
  auto omega_at = [&](const RVec& y) {
    return spin_connection_at(m, y, rep).omega;
  };
  auto curvature = [&](double step) {
    const int n = m.n;
    std::vector<std::vector<RMat>> dom(n);  // dom[mu][nu] = d_mu omega_nu
    for (int mu = 0; mu < n; ++mu) {
      RVec xp = x, xm = x;
      xp(mu) += step;
      xm(mu) -= step;
      auto op = omega_at(xp);
      auto om = omega_at(xm);
      dom[mu].resize(n);
      for (int nu = 0; nu < n; ++nu)
        dom[mu][nu] = (op[nu] - om[nu]) / (2.0 * step);
    }
    auto o = omega_at(x);
    RMat eta = m.frame_eta.asDiagonal();
    std::vector<RMat> r;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = mu + 1; nu < n; ++nu) {
        // lowered commutator needs one eta between the factors
        RMat comm = o[mu] * eta * o[nu] - o[nu] * eta * o[mu];
        r.push_back(dom[mu][nu] - dom[nu][mu] + comm);
      }
    return r;
  };
  const auto rh = curvature(h);
  const auto rh2 = curvature(h / 2.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < rh.size(); ++k) {
    RMat extrap = (4.0 * rh2[k] - rh[k]) / 3.0;  // entrywise Richardson
    worst = std::max(worst, extrap.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<Mat> coordinate_gammas(const ChartMetric& m, const RVec& x,
                                   const MatrixRep& rep) {
  Vierbein vb = vierbein_at(m, x);
  RMat einv = vb.e.inverse();  // (mu, a)
  const int d = rep.d();
  std::vector<Mat> out(m.n, Mat::Zero(d, d));
  for (int mu = 0; mu < m.n; ++mu)
    for (int a = 0; a < m.n; ++a)
      out[mu] += einv(mu, a) * m.frame_eta(a) * rep.gamma[a];
  return out;
}

std::vector<Vec> covariant_derivative_spinor(const std::vector<Vec>& psi,
                                             const std::vector<RVec>& xs,
                                             double dt, const ChartMetric& m,
                                             const MatrixRep& rep) {
  if (psi.size() < 3)
    throw InvalidArgument("covariant derivative needs at least 3 samples");
  if (psi.size() != xs.size())
    throw DimensionMismatch("spinor and curve sample counts differ");
  if (!(dt > 0.0)) throw InvalidArgument("sample spacing must be positive");

  std::vector<Vec> out;
  out.reserve(psi.size() - 2);
  for (std::size_t i = 1; i + 1 < psi.size(); ++i) {
    Vec dpsi = (psi[i + 1] - psi[i - 1]) / (2.0 * dt);
    RVec xdot = (xs[i + 1] - xs[i - 1]) / (2.0 * dt);
    SpinConnection sc = spin_connection_at(m, xs[i], rep);
    Vec v = dpsi;
    for (int mu = 0; mu < m.n; ++mu) v += xdot(mu) * (sc.Omega[mu] * psi[i]);
    out.push_back(std::move(v));
  }
  return out;
}

Vec curved_dirac_apply(const Field& psi, const ChartMetric& m,
                       const MatrixRep& rep, const std::vector<int>& idx) {
  if (psi.grid.dim() != m.n)
    throw DimensionMismatch("field grid rank does not match the chart");
  if (psi.comps != rep.d())
    throw DimensionMismatch("field components do not match the spinor size");
  for (int a = 0; a < m.n; ++a)
    if (idx[a] < 1 || idx[a] > psi.grid.shape[a] - 2)
      throw InvalidArgument("curved dirac: point has no interior neighbors");

  const RVec x = psi.grid.point(idx);
  std::vector<Mat> gup = coordinate_gammas(m, x, rep);
  SpinConnection sc = spin_connection_at(m, x, rep);

  Vec out = Vec::Zero(psi.comps);
  Vec here = psi.at(idx);
  for (int mu = 0; mu < m.n; ++mu) {
    std::vector<int> ip = idx, im = idx;
    ip[mu] += 1;
    im[mu] -= 1;
    Vec dmu = (psi.at(ip) - psi.at(im)) / (2.0 * psi.grid.spacing(mu));
    out += gup[mu] * (dmu + sc.Omega[mu] * here);
  }
  return out;
}

double dalembert_residual(const Field& phi, const ChartMetric& m) {
  if (phi.comps != 1) throw InvalidArgument("dalembert check wants a scalar field");
  if (phi.grid.dim() != m.n)
    throw DimensionMismatch("field grid rank does not match the chart");
  const int n = m.n;
  const MatrixRep rep = frame_rep_for(m);
  const int d = rep.d();

  auto value = [&phi](std::vector<int> idx) { return phi.at(idx)(0); };
  auto dens = [&m](const RVec& y) {
    return std::sqrt(std::abs(m.g(y).determinant()));
  };
  auto flux_vec = [&](const std::vector<int>& idx) {
    // sqrt|g| g^{mu nu} d_nu phi at a lattice point
    const RVec y = phi.grid.point(idx);
    RMat ginv = m.g(y).inverse();
    Vec grad(n);
    for (int nu = 0; nu < n; ++nu) {
      std::vector<int> ip = idx, im = idx;
      ip[nu] += 1;
      im[nu] -= 1;
      grad(nu) = (value(ip) - value(im)) / (2.0 * phi.grid.spacing(nu));
    }
    Vec f(n);
    for (int mu = 0; mu < n; ++mu) {
      cx s = 0.0;
      for (int nu = 0; nu < n; ++nu) s += ginv(mu, nu) * grad(nu);
      f(mu) = dens(y) * s;
    }
    return f;
  };

  double worst = 0.0;
  std::vector<int> idx(n, 0);
  // walk the 2-layer interior
  std::vector<int> lo(n), hi(n);
  for (int a = 0; a < n; ++a) {
    lo[a] = 2;
    hi[a] = phi.grid.shape[a] - 3;
    if (hi[a] < lo[a]) throw InvalidArgument("grid too small for 2 ghost layers");
  }
  idx = lo;
  while (true) {
    const RVec x = phi.grid.point(idx);
    Christoffel G = christoffel_at(m, x);
    std::vector<Mat> gup = coordinate_gammas(m, x, rep);

    Vec grad(n);
    Mat hess = Mat::Zero(n, n);
    for (int mu = 0; mu < n; ++mu) {
      std::vector<int> ip = idx, im = idx;
      ip[mu] += 1;
      im[mu] -= 1;
      const double hmu = phi.grid.spacing(mu);
      grad(mu) = (value(ip) - value(im)) / (2.0 * hmu);
      hess(mu, mu) =
          (value(ip) - 2.0 * value(idx) + value(im)) / (hmu * hmu);
      for (int nu = mu + 1; nu < n; ++nu) {
        std::vector<int> pp = idx, pm = idx, mp = idx, mm2 = idx;
        pp[mu] += 1; pp[nu] += 1;
        pm[mu] += 1; pm[nu] -= 1;
        mp[mu] -= 1; mp[nu] += 1;
        mm2[mu] -= 1; mm2[nu] -= 1;
        const double hnu = phi.grid.spacing(nu);
        hess(mu, nu) = (value(pp) - value(pm) - value(mp) + value(mm2)) /
                       (4.0 * hmu * hnu);
        hess(nu, mu) = hess(mu, nu);
      }
    }
    // covariant hessian on a scalar
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        for (int sig = 0; sig < n; ++sig)
          hess(mu, nu) -= G.gamma(sig, mu, nu) * grad(sig);

    Mat contracted = Mat::Zero(d, d);
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        contracted += gup[mu] * gup[nu] * hess(mu, nu);
    const cx lhs = contracted.trace() / double(d);

    cx lb = 0.0;
    for (int mu = 0; mu < n; ++mu) {
      std::vector<int> ip = idx, im = idx;
      ip[mu] += 1;
      im[mu] -= 1;
      lb += (flux_vec(ip)(mu) - flux_vec(im)(mu)) /
            (2.0 * phi.grid.spacing(mu));
    }
    lb /= dens(x);

    worst = std::max(worst, std::abs(lhs - lb));

    int a = n - 1;
    while (a >= 0) {
      if (++idx[a] <= hi[a]) break;
      idx[a] = lo[a];
      --a;
    }
    if (a < 0) break;
  }
  return worst;
}

}  // namespace cliffbundle
