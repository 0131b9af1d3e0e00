// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "runner/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <utility>

#include "core/evolve.hpp"
#include "core/gamma.hpp"
#include "core/geometry.hpp"
#include "core/isomorphism.hpp"
#include "core/kg.hpp"
#include "core/lattice.hpp"
#include "core/linalg.hpp"
#include "core/metric.hpp"
#include "core/multivector.hpp"
#include "core/rng.hpp"
#include "core/transport.hpp"
#include "core/trivialization.hpp"

namespace cliffbundle {

namespace {

struct Ctx {
  const VerifyOptions& opt;
  std::vector<Check> checks;

  // residual tolerances scale with --tolerance-scale; order thresholds do not
  void below(const std::string& name, double measured, double tol) {
    checks.push_back(check_below(name, measured, tol * opt.tolerance_scale));
  }
  void at_least(const std::string& name, double measured, double thr) {
    checks.push_back(check_at_least(name, measured, thr));
  }
};

Mat eye(int d) { return Mat::Identity(d, d); }

double mdist(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// spectral exponential of s*h for hermitian h; independent of core expm
Mat expm_spectral(const Mat& h, cx s) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Vec ph(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    ph(i) = std::exp(s * es.eigenvalues()(i));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Multivector random_mv(const AlgebraSpec& spec, Rng& rng) {
  Multivector a = mv_zero(spec);
  for (std::uint32_t b = 0; b < std::uint32_t(spec.dim()); ++b)
    a.set(b, rng.normal());
  return a;
}

Vec random_vec(Rng& rng, int d) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.cnormal();
  return v;
}

RVec pt2(double a, double b) {
  RVec x(2);
  x << a, b;
  return x;
}

// ---------------------------------------------------------------- clifford

void suite_clifford(Ctx& ctx) {
  Rng rng(ctx.opt.seed);
  const std::vector<std::pair<int, int>> sigs{{3, 1}, {1, 3}, {2, 0}, {1, 1}};

  {
    double worst = 0.0;
    bool injected = false;
    for (auto [p, q] : sigs) {
      AlgebraSpec spec = make_algebra(p, q);
      for (int i = 0; i < p + q; ++i)
        for (int j = 0; j < p + q; ++j) {
          Multivector r = add(geometric_product(mv_generator(spec, i),
                                                mv_generator(spec, j)),
                              geometric_product(mv_generator(spec, j),
                                                mv_generator(spec, i)));
          const double want = i == j ? (i < p ? 2.0 : -2.0) : 0.0;
          r.set(0u, r.coeff(0u) - want);
          if (!injected && ctx.opt.perturb != 0.0) {
            r.set(0u, r.coeff(0u) + ctx.opt.perturb);  // fault injection
            injected = true;
          }
          worst = std::max(worst, r.max_abs_coeff());
        }
    }
    ctx.below("generator_relations", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (auto [p, q] : {std::pair<int, int>{3, 1}, {1, 1}}) {
      AlgebraSpec spec = make_algebra(p, q);
      for (int t = 0; t < 12; ++t) {
        Multivector a = random_mv(spec, rng);
        Multivector b = random_mv(spec, rng);
        Multivector c = random_mv(spec, rng);
        worst = std::max(
            worst, mv_distance(geometric_product(geometric_product(a, b), c),
                               geometric_product(a, geometric_product(b, c))));
      }
    }
    ctx.below("product_associativity", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (auto [p, q] : sigs) {
      AlgebraSpec spec = make_algebra(p, q);
      worst = std::max(worst,
                       std::abs(double(spec.dim()) - std::ldexp(1.0, p + q)));
    }
    ctx.below("basis_dimension", worst, 0.5);
  }

  {
    // blade products close: one surviving coefficient of unit magnitude
    double worst = 0.0;
    for (auto [p, q] : {std::pair<int, int>{2, 0}, {1, 1}, {3, 1}}) {
      AlgebraSpec spec = make_algebra(p, q);
      for (std::uint32_t i = 0; i < std::uint32_t(spec.dim()); ++i)
        for (std::uint32_t j = 0; j < std::uint32_t(spec.dim()); ++j) {
          Multivector r =
              geometric_product(mv_basis(spec, i), mv_basis(spec, j));
          double total = 0.0;
          for (const auto& [blade, co] : r.coeffs) total += std::abs(co);
          const double mx = r.max_abs_coeff();
          worst = std::max(worst, std::abs(mx - 1.0));
          worst = std::max(worst, total - mx);
        }
    }
    ctx.below("blade_closure", worst, 1e-15);
  }

  {
    AlgebraSpec spec = make_algebra(3, 1);
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
      Multivector a = random_mv(spec, rng);
      Multivector sum = mv_zero(spec);
      for (int k = 0; k <= spec.n(); ++k) {
        Multivector pk = grade_project(a, k);
        sum = add(sum, pk);
        worst = std::max(worst, mv_distance(grade_project(pk, k), pk));
        for (int j = 0; j <= spec.n(); ++j)
          if (j != k)
            worst = std::max(worst, grade_project(pk, j).max_abs_coeff());
      }
      worst = std::max(worst, mv_distance(sum, a));
    }
    ctx.below("grade_projection", worst, 1e-15);
  }
}

// ------------------------------------------------------------------- gamma

void suite_gamma(Ctx& ctx) {
  Rng rng(ctx.opt.seed);
  std::vector<MatrixRep> reps{dirac_gammas(Convention::MostlyMinus),
                              dirac_gammas(Convention::MostlyPlus),
                              dirac_gammas_1p1(Convention::MostlyMinus),
                              dirac_gammas_1p1(Convention::MostlyPlus)};

  {
    double worst = 0.0;
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
      std::vector<Mat> gam = reps[ri].gamma;
      if (ri == 0 && ctx.opt.perturb != 0.0)
        gam[0] += ctx.opt.perturb * eye(reps[ri].d());  // fault injection
      for (int a = 0; a < reps[ri].n; ++a)
        for (int b = 0; b < reps[ri].n; ++b) {
          const double want = a == b ? 2.0 * reps[ri].metric_diag(a) : 0.0;
          worst = std::max(worst, mdist(gam[a] * gam[b] + gam[b] * gam[a],
                                        want * eye(reps[ri].d())));
        }
    }
    ctx.below("clifford_relation", worst, 1e-12);
  }

  {
    const MatrixRep& rep = reps[0];
    double worst = 0.0;
    for (auto [j, k] : {std::pair<int, int>{1, 2}, {2, 3}}) {
      const double a = rng.uniform(-1.5, 1.5);
      const double b = rng.uniform(-1.5, 1.5);
      worst = std::max(worst, mdist(spin_rotate(rep, j, k, a) *
                                        spin_rotate(rep, j, k, b),
                                    spin_rotate(rep, j, k, a + b)));
    }
    ctx.below("rotation_additivity", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (int ri : {0, 1}) {
      const MatrixRep& rep = reps[ri];
      worst = std::max(
          worst, mdist(spin_rotate(rep, 1, 2, 2.0 * kPi), -eye(rep.d())));
      worst = std::max(
          worst, mdist(spin_rotate(rep, 1, 2, 4.0 * kPi), eye(rep.d())));
    }
    ctx.below("double_cover", worst, 1e-10);
  }

  {
    double worst = 0.0;
    auto fold = [&](const IsomorphismReport& r) {
      worst = std::max(worst, r.relation_residual);
      worst = std::max(worst, r.product_residual);
      if (!r.passed || !r.full_algebra_ok) worst = std::max(worst, 1.0);
    };
    fold(check_matrix_isomorphism(make_algebra(1, 3), reps[0].gamma, true));
    std::vector<Mat> spatial_first{reps[1].gamma[1], reps[1].gamma[2],
                                   reps[1].gamma[3], reps[1].gamma[0]};
    fold(check_matrix_isomorphism(make_algebra(3, 1), spatial_first, true));
    fold(check_matrix_isomorphism(make_algebra(1, 1), reps[2].gamma, true));
    ctx.below("dirac_isomorphism", worst, 1e-12);
  }
}

// ---------------------------------------------------------------- geometry

void suite_geometry(Ctx& ctx) {
  struct Sample {
    ChartMetric m;
    RVec x;
  };
  std::vector<Sample> curved{{polar_flat_2d(), pt2(2.0, 0.7)},
                             {polar_flat_2d(), pt2(1.5, 0.8)},
                             {frw_1p1(0.3), pt2(0.5, 1.2)},
                             {rindler_1p1(1.0), pt2(0.0, 1.3)}};

  {
    double worst = 0.0;
    std::vector<Sample> all = curved;
    {
      RVec x4(4);
      x4 << 0.3, -0.2, 0.7, 1.1;
      all.push_back({minkowski_metric(4), x4});
      all.push_back({minkowski_metric(4), RVec::Zero(4)});
    }
    bool injected = false;
    for (const Sample& s : all) {
      Vierbein vb = vierbein_at(s.m, s.x);
      RMat e = vb.e;
      if (!injected && ctx.opt.perturb != 0.0) {
        e(0, 0) *= 1.0 + ctx.opt.perturb;  // fault injection
        injected = true;
      }
      RMat back = e.transpose() * vb.eta.asDiagonal() * e;
      worst = std::max(worst, (back - s.m.g(s.x)).cwiseAbs().maxCoeff());
    }
    ctx.below("vierbein_round_trip", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (const Sample& s : curved) {
      MatrixRep rep = frame_rep_for(s.m);
      SpinConnection sc = spin_connection_at(s.m, s.x, rep);
      for (const RMat& om : sc.omega)
        worst = std::max(worst,
                         (om + om.transpose()).cwiseAbs().maxCoeff());
    }
    ctx.below("connection_antisymmetry", worst, 1e-15);
  }

  {
    // recompute the spinor form from the lowered one-form and raised gammas
    double worst = 0.0;
    for (const Sample& s : curved) {
      MatrixRep rep = frame_rep_for(s.m);
      SpinConnection sc = spin_connection_at(s.m, s.x, rep);
      std::vector<Mat> dual = dual_gammas(rep);
      for (int mu = 0; mu < s.m.n; ++mu) {
        Mat want = Mat::Zero(rep.d(), rep.d());
        for (int a = 0; a < s.m.n; ++a)
          for (int b = 0; b < s.m.n; ++b)
            want += 0.125 * sc.omega[mu](a, b) *
                    (dual[a] * dual[b] - dual[b] * dual[a]);
        worst = std::max(worst, mdist(sc.Omega[mu], want));
      }
    }
    ctx.below("connection_forms_agree", worst, 1e-12);
  }

  {
    double worst = 0.0;
    std::vector<Sample> flats{{minkowski_metric(2), pt2(0.1, -0.2)},
                              {polar_flat_2d(), pt2(1.5, 0.8)},
                              {rindler_1p1(1.0), pt2(0.0, 1.2)}};
    for (const Sample& s : flats)
      worst = std::max(
          worst, spin_curvature_residual(s.m, s.x, frame_rep_for(s.m)));
    ctx.below("flat_curvature", worst, 1e-5);
  }

  {
    ChartMetric m = frw_1p1(0.05);
    auto residual_at = [&](int npts) {
      const double h = 1.0 / (npts - 1);
      RVec sp(2), org(2);
      sp << h, h;
      org << 0.0, 0.0;
      Grid grid = make_grid({npts, npts}, sp, org);
      Field f = make_field(grid, 1);
      for (int i = 0; i < npts; ++i)
        for (int j = 0; j < npts; ++j) {
          RVec x = grid.point({i, j});
          Vec v(1);
          v << std::exp(cx(0.0, 1.3 * x(0) + 1.7 * x(1)));
          f.set({i, j}, v);
        }
      return dalembert_residual(f, m);
    };
    const double order = std::log2(residual_at(48) / residual_at(96));
    ctx.at_least("dalembert_order", order, 1.9);
  }
}

// ------------------------------------------------------------------ bundle

void suite_bundle(Ctx& ctx) {
  Rng rng(ctx.opt.seed);

  {
    double worst = 0.0;
    for (std::uint64_t seed : {11u, 12u}) {
      Trivialization tr = random_smooth_trivialization(4, 2, seed, 0.3);
      RVec x = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
      Mat op = random_complex(rng, 4, 4);
      Mat l = triv_at(tr, x);
      Mat down = l.adjoint() * op * l;   // pulled-back observable form
      Eigen::ComplexEigenSolver<Mat> ea(op), eb(conjugate_operator(tr, x, op));
      for (int i = 0; i < 4; ++i) {
        double best = 1e300;
        for (int j = 0; j < 4; ++j)
          best = std::min(best, std::abs(ea.eigenvalues()(i) -
                                         eb.eigenvalues()(j)));
        worst = std::max(worst, best);
      }
      Vec psi = random_vec(rng, 4);
      const cx up_val = (l * psi).dot(op * (l * psi));
      const cx dn_val = psi.dot(down * psi);
      worst = std::max(worst, std::abs(up_val - dn_val));
    }
    ctx.below("trivialization_independence", worst, 1e-10);
  }

  {
    double worst = 0.0;
    std::vector<MatrixRep> reps{dirac_gammas(Convention::MostlyMinus),
                                dirac_gammas_1p1(Convention::MostlyPlus)};
    bool injected = false;
    for (const MatrixRep& rep : reps)
      for (int k = 0; k < 10; ++k) {
        Trivialization tr =
            random_smooth_trivialization(rep.d(), 2, rng.raw() % 100000, 0.25);
        RVec x = pt2(rng.uniform(-1, 1), rng.uniform(-1, 1));
        std::vector<Mat> g;
        for (const Mat& gm : rep.gamma)
          g.push_back(conjugate_operator(tr, x, gm));
        if (!injected && ctx.opt.perturb != 0.0) {
          g[0] *= 1.0 + ctx.opt.perturb;  // fault injection
          injected = true;
        }
        for (int mu = 0; mu < rep.n; ++mu)
          for (int nu = 0; nu < rep.n; ++nu) {
            const double want = mu == nu ? 2.0 * rep.metric_diag(mu) : 0.0;
            worst = std::max(worst, mdist(g[mu] * g[nu] + g[nu] * g[mu],
                                          want * eye(rep.d())));
          }
      }
    ctx.below("lifted_anticommutator", worst, 1e-12);
  }

  {
    Mat h0 = random_hermitian(rng, 3);
    Mat h1 = random_hermitian(rng, 3);
    auto h = [&](double t) { return Mat(h0 + std::sin(t) * h1); };
    TransportOperator u = transport_from_hamiltonian(h, 1.0, 0.0, 1.0, 100);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      double a = rng.uniform(0.0, 1.0);
      double b = rng.uniform(0.0, 1.0);
      double c = rng.uniform(0.0, 1.0);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      worst = std::max(worst, mdist(u.U(c, a), u.U(c, b) * u.U(b, a)));
      worst = std::max(worst, mdist(u.U(a, b) * u.U(b, a), eye(3)));
      worst = std::max(worst, mdist(u.U(b, b), eye(3)));
    }
    ctx.below("transport_cocycle", worst, 1e-10);
  }

  {
    double worst = 0.0;
    Mat hc = random_hermitian(rng, 4);
    auto h_const = [&](double) { return hc; };
    TransportOperator uc =
        transport_from_hamiltonian(h_const, 0.7, 0.0, 1.0, 1000);
    worst = std::max(worst, frob(hamiltonian_from_transport(uc, 0.7, 0.5) - hc));

    Mat h0 = random_hermitian(rng, 3);
    Mat h1 = random_hermitian(rng, 3);
    auto h = [&](double t) { return Mat(h0 + t * h1); };
    TransportOperator ul = transport_from_hamiltonian(h, 1.0, 0.0, 1.0, 1000);
    worst = std::max(
        worst, frob(hamiltonian_from_transport(ul, 1.0, 0.5) - h(0.5)));
    ctx.below("connection_round_trip", worst, 1e-6);

    Mat want = connection_of_hamiltonian(h(0.5), 1.0);
    auto err_at = [&](int steps) {
      TransportOperator u =
          transport_from_hamiltonian(h, 1.0, 0.0, 1.0, steps);
      return frob(connection_from_transport(u, 0.5, 1.0 / steps) - want);
    };
    const double order = std::log2(err_at(200) / err_at(400));
    ctx.below("bijection_order", std::abs(order - 2.0), 0.1);
  }

  {
    // commuting family evolved exactly; the derivation quotient of the lifted
    // section decays linearly in the probe step
    Mat h0 = random_hermitian(rng, 2);
    auto f = [](double t) { return 1.0 + 0.5 * std::sin(t); };
    auto bigf = [](double t) { return t + 0.5 * (1.0 - std::cos(t)); };
    auto h = [&](double t) { return Mat(f(t) * h0); };
    TransportOperator u = transport_from_hamiltonian(h, 1.0, 0.0, 1.0, 5);

    Eigen::SelfAdjointEigenSolver<Mat> es(h0);
    Vec lam0 = random_vec(rng, 2);
    auto lam_of = [&](double t) {
      Vec ph(2);
      for (int i = 0; i < 2; ++i)
        ph(i) = std::exp(cx(0, -bigf(t) * es.eigenvalues()(i)));
      return Vec(es.eigenvectors() * ph.asDiagonal() *
                 (es.eigenvectors().adjoint() * lam0));
    };

    const double s = 0.1;
    std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<double> times;
    for (int i = 0; i <= 100; ++i) times.push_back(0.01 * i);
    for (double e : eps)
      if (e < 1e-2) times.push_back(s + e);
    std::sort(times.begin(), times.end());
    SectionAlongPath lam;
    for (double t : times) {
      lam.times.push_back(t);
      lam.values.push_back(lam_of(t));
    }
    std::vector<double> lx, ly;
    for (double e : eps) {
      lx.push_back(std::log(e));
      ly.push_back(std::log(path_derivation(lam, u, s, e).norm()));
    }
    ctx.below("parallel_decay_slope", std::abs(fit_slope(lx, ly) - 1.0), 0.1);
  }
}

// --------------------------------------------------------------- evolution

void suite_evolution(Ctx& ctx) {
  Rng rng(ctx.opt.seed);

  {
    Mat h0 = random_hermitian(rng, 4);
    Mat h1 = random_hermitian(rng, 4);
    auto h = [&](double t) { return Mat(h0 + std::sin(t) * h1); };
    Vec psi0 = random_vec(rng, 4).normalized();
    EvolveResult r = time_ordered_evolve(h, psi0, 0.0, 1.0, 200);
    ctx.below("propagator_unitarity",
              mdist(r.u.adjoint() * r.u, eye(4)), 1e-10);
  }

  {
    Mat h0 = random_hermitian(rng, 2);
    auto h = [&](double t) { return Mat((1.0 + 0.5 * std::sin(t)) * h0); };
    const double bigf = 1.0 + 0.5 * (1.0 - std::cos(1.0));
    Mat exact = expm_spectral(h0, cx(0, -bigf));
    Vec psi0 = random_vec(rng, 2).normalized();
    auto err_at = [&](int steps) {
      return frob(time_ordered_evolve(h, psi0, 0.0, 1.0, steps).u - exact);
    };
    const double order = std::log2(err_at(200) / err_at(400));
    ctx.below("time_ordered_order", std::abs(order - 2.0), 0.1);
  }

  {
    const int n = 64;
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.steps = 1000;
    cfg.m = 0.5;
    cfg.e = 0.8;
    cfg.a0 = RVec(n);
    cfg.ax = RVec(n);
    for (int j = 0; j < n; ++j) {
      cfg.a0(j) = rng.uniform(-1, 1);
      cfg.ax(j) = rng.uniform(-1, 1);
    }
    LatticeState psi0 = make_lattice_state(n, 0.1, 2);
    for (int j = 0; j < n; ++j) {
      psi0.data(0, j) = rng.cnormal();
      psi0.data(1, j) = rng.cnormal();
    }
    psi0.data /= psi0.norm();
    Trajectory tr = dirac_evolve_1p1(psi0, cfg);
    double drift = 0.0;
    const double n0 = tr.states.front().norm();
    for (const LatticeState& s : tr.states)
      drift = std::max(drift, std::abs(s.norm() - n0));
    ctx.below("norm_drift", drift, cfg.steps * 1e-13);
  }

  {
    const int n = 32;
    LatticeState phi = make_lattice_state(n, 0.2, 1);
    LatticeState phidot = phi;
    for (int j = 0; j < n; ++j) {
      phi.data(0, j) = rng.cnormal();
      phidot.data(0, j) = rng.cnormal();
    }
    auto [p2, pd2] = kg_second_order(kg_first_order(phi, phidot, 1.3), 1.3);
    const double worst =
        std::max((p2.data - phi.data).cwiseAbs().maxCoeff(),
                 (pd2.data - phidot.data).cwiseAbs().maxCoeff());
    ctx.below("kg_round_trip", worst, 1e-14);
  }

  {
    const int nn = 64;
    const double dx = 0.2, time = 0.5, m = 1.0;
    RVec phi0(nn);
    const double xc = 0.5 * nn * dx;
    for (int j = 0; j < nn; ++j) {
      const double x = j * dx;
      phi0(j) = std::exp(-(x - xc) * (x - xc) / 2.0);
    }
    LatticeState phi = make_lattice_state(nn, dx, 1);
    LatticeState phidot = phi;
    for (int j = 0; j < nn; ++j) phi.data(0, j) = phi0(j);
    Trajectory tr = kg_evolve(kg_first_order(phi, phidot, m), m, time, 1);
    auto [phi_t, phidot_t] = kg_second_order(tr.states.back(), m);
    RVec ref = phi_t.data.real().transpose().col(0);

    auto leapfrog = [&](double dt) {
      auto accel = [&](const RVec& f) {
        RVec a(nn);
        for (int j = 0; j < nn; ++j) {
          const double lap =
              (f((j + 1) % nn) - 2.0 * f(j) + f((j + nn - 1) % nn)) /
              (dx * dx);
          a(j) = lap - m * m * f(j);
        }
        return a;
      };
      RVec prev = phi0;
      RVec cur = phi0 + 0.5 * dt * dt * accel(phi0);
      const int steps = int(std::lround(time / dt));
      for (int s = 1; s < steps; ++s) {
        RVec next = 2.0 * cur - prev + dt * dt * accel(cur);
        prev = cur;
        cur = next;
      }
      return (cur - ref).cwiseAbs().maxCoeff();
    };
    const double order = std::log2(leapfrog(2e-3) / leapfrog(1e-3));
    ctx.below("kg_equivalence_order", std::abs(order - 2.0), 0.3);
  }

  const MatrixRep rep = dirac_gammas_1p1(Convention::MostlyMinus);
  const ChartMetric mink = minkowski_metric(2);

  {
    const int n = 64;
    Mat op = momentum_operator(n, 0.1, rep, mink);
    if (ctx.opt.perturb != 0.0)
      op(0, 1) += ctx.opt.perturb;  // fault injection
    ctx.below("momentum_hermiticity",
              dirac_hermiticity_residual(op, n, rep), 1e-12);
  }

  {
    const int n = 64;
    const double dx = 0.1;
    Mat op = momentum_operator(n, dx, rep, mink);
    LatticeState psi0 = make_lattice_state(n, dx, 2);
    const double xc = 0.5 * n * dx;
    const double k = 2.0 * kPi * 3.0 / (n * dx);
    for (int j = 0; j < n; ++j) {
      const double x = j * dx;
      const cx env = std::exp(cx(-(x - xc) * (x - xc) / 2.0, k * x));
      psi0.data(0, j) = env;
      psi0.data(1, j) = cx(0.4, 0.3) * env;
    }
    psi0.data /= psi0.norm();
    EvolutionConfig cfg;
    cfg.dt = 0.01;
    cfg.steps = 200;
    cfg.m = 0.0;
    Trajectory tr = dirac_evolve_1p1(psi0, cfg);
    const cx p0 = dirac_expectation(op, tr.states.front(), rep);
    double drift = 0.0;
    for (const LatticeState& s : tr.states)
      drift = std::max(drift, std::abs(dirac_expectation(op, s, rep) - p0));
    ctx.below("momentum_conservation", drift, 1e-8);
  }

  {
    // assembling in a conjugated frame commutes with conjugating the assembly
    const int k = 2;
    const int d = k * rep.d();
    Mat s = eye(rep.d()) + 0.3 * random_complex(rng, rep.d(), rep.d());
    Mat w = kron(Mat(eye(k)), s);
    Mat winv = w.inverse();
    Mat h = random_hermitian(rng, d);
    std::vector<Mat> p{random_hermitian(rng, d)};

    MatrixRep conj = rep;
    Mat sinv = s.inverse();
    for (Mat& gm : conj.gamma) gm = sinv * gm * s;
    SpinVector up = spin_vector_assemble(h, p, rep);
    SpinVector dn = spin_vector_assemble(Mat(winv * h * w),
                                         {Mat(winv * p[0] * w)}, conj);
    double worst = mdist(dn.aggregate, winv * up.aggregate * w);
    for (std::size_t i = 0; i < up.comps.size(); ++i)
      worst = std::max(worst, mdist(dn.comps[i], winv * up.comps[i] * w));
    ctx.below("bundle_covariance", worst, 1e-10);
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"clifford", "gamma", "geometry",
                                              "bundle", "evolution"};
  return names;
}

Report run_verify_suite(const std::string& suite, const VerifyOptions& opt) {
  Report r;
  r.suite = suite;
  r.rng = Rng::algorithm();
  r.seed = opt.seed;
  r.tolerance_scale = opt.tolerance_scale;
  r.perturb = opt.perturb;

  if (suite == "all") {
    for (const std::string& name : verify_suite_names()) {
      Report sub = run_verify_suite(name, opt);
      for (Check& c : sub.checks) {
        c.name = name + "." + c.name;
        r.checks.push_back(std::move(c));
      }
    }
    r.sort_checks();
    return r;
  }

  Ctx ctx{opt, {}};
  if (suite == "clifford")
    suite_clifford(ctx);
  else if (suite == "gamma")
    suite_gamma(ctx);
  else if (suite == "geometry")
    suite_geometry(ctx);
  else if (suite == "bundle")
    suite_bundle(ctx);
  else if (suite == "evolution")
    suite_evolution(ctx);
  else
    throw InvalidArgument("unknown suite: " + suite);

  r.checks = std::move(ctx.checks);
  r.sort_checks();
  return r;
}

}  // namespace cliffbundle
