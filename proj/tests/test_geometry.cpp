#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "core/geometry.hpp"
#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "testutil.hpp"

using namespace cliffbundle;
using namespace cliffbundle::testutil;

namespace {

RVec pt(double a, double b) {
  RVec x(2);
  x << a, b;
  return x;
}

// independent Christoffel oracle: plain 2nd-order differences of g at h and
// h/2, Richardson-combined, straight from the Levi-Civita formula
double christoffel_oracle(const ChartMetric& m, const RVec& x, int alpha,
                          int mu, int nu, double h) {
  auto gamma_at = [&](double step) {
    std::vector<RMat> dg(m.n);
    for (int d = 0; d < m.n; ++d) {
      RVec xp = x, xm = x;
      xp(d) += step;
      xm(d) -= step;
      dg[d] = (m.g(xp) - m.g(xm)) / (2.0 * step);
    }
    RMat ginv = m.g(x).inverse();
    double s = 0.0;
    for (int beta = 0; beta < m.n; ++beta)
      s += ginv(alpha, beta) *
           (dg[mu](beta, nu) + dg[nu](beta, mu) - dg[beta](mu, nu));
    return 0.5 * s;
  };
  return (4.0 * gamma_at(h / 2) - gamma_at(h)) / 3.0;
}

}  // namespace

TEST_CASE("flat cartesian charts are trivial") {
  for (int n : {2, 4}) {
    ChartMetric m = minkowski_metric(n);
    Vierbein vb = vierbein_at(m, RVec::Zero(n));
    CHECK(dist(Mat(vb.e.cast<cx>()), eye(n)) == 0.0);
    CHECK(vb.eta(0) == -1.0);
    CHECK(vb.eta(n - 1) == 1.0);

    Christoffel G = christoffel_at(m, RVec::Zero(n));
    double worst = 0.0;
    for (int a = 0; a < n; ++a)
      worst = std::max(worst, G.c[a].cwiseAbs().maxCoeff());
    CHECK(worst == 0.0);

    MatrixRep rep = frame_rep_for(m);
    SpinConnection sc = spin_connection_at(m, RVec::Zero(n), rep);
    for (int mu = 0; mu < n; ++mu) {
      CHECK(sc.omega[mu].cwiseAbs().maxCoeff() < 1e-14);
      CHECK(frob(sc.Omega[mu]) < 1e-14);
    }
  }
}

TEST_CASE("vierbein gauge and round trips") {
  SUBCASE("lorentzian diagonal example") {
    ChartMetric m;
    m.name = "radial";
    m.n = 2;
    m.sig = Signature{1, 1};
    m.frame_eta = pt(-1.0, 1.0);
    m.g = [](const RVec& x) {
      RMat g = RMat::Zero(2, 2);
      g(0, 0) = -1.0;
      g(1, 1) = x(0) * x(0);
      return g;
    };
    Vierbein vb = vierbein_at(m, pt(2.0, 0.3));
    CHECK(std::abs(vb.e(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(vb.e(1, 1) - 2.0) < 1e-15);
    CHECK(std::abs(vb.e(0, 1)) == 0.0);
    CHECK(vb.eta(0) == -1.0);
  }
  SUBCASE("random congruences of eta reconstruct g") {
    Rng rng(71);
    for (auto [p, q] : {std::pair{2, 0}, {1, 1}}) {
      RMat eta = RMat::Identity(2, 2);
      if (q == 1) eta(0, 0) = -1.0;
      for (int trial = 0; trial < 6; ++trial) {
        RMat pm(2, 2);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) pm(r, c) = rng.uniform(-1.0, 1.0);
        pm += 2.0 * RMat::Identity(2, 2);  // keep it invertible
        RMat g = pm * eta * pm.transpose();
        ChartMetric m = table_metric(g);
        REQUIRE(m.sig.p == p);
        REQUIRE(m.sig.q == q);
        Vierbein vb = vierbein_at(m, pt(0.0, 0.0));
        RMat back = vb.e.transpose() * RMat(vb.eta.asDiagonal()) * vb.e;
        CHECK((back - g).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
  SUBCASE("declared signature is enforced") {
    ChartMetric m = polar_flat_2d();
    m.sig = Signature{1, 1};  // lie about the signature
    m.frame_eta = pt(-1.0, 1.0);
    CHECK_THROWS_AS(vierbein_at(m, pt(2.0, 0.0)), SignatureMismatch);

    ChartMetric mink = minkowski_metric(2);
    CHECK_THROWS_AS(vierbein_at(mink, RVec::Zero(3)), DimensionMismatch);
  }
  SUBCASE("asymmetric and singular metrics are rejected") {
    ChartMetric bad;
    bad.name = "bad";
    bad.n = 2;
    bad.sig = Signature{2, 0};
    bad.frame_eta = pt(1.0, 1.0);
    bad.g = [](const RVec&) {
      RMat g(2, 2);
      g << 1.0, 0.5, -0.5, 1.0;
      return g;
    };
    CHECK_THROWS_AS(vierbein_at(bad, pt(0, 0)), InvalidArgument);

    ChartMetric sing = polar_flat_2d();
    CHECK_THROWS_AS(vierbein_at(sing, pt(0.0, 0.0)), SingularOperator);
  }
}

TEST_CASE("christoffel symbols on the polar chart") {
  ChartMetric m = polar_flat_2d();
  RVec x = pt(2.0, 0.7);

  Christoffel G = christoffel_at(m, x);  // analytic dg path
  CHECK(std::abs(G.gamma(0, 1, 1) - (-2.0)) < 1e-12);
  CHECK(std::abs(G.gamma(1, 0, 1) - 0.5) < 1e-12);
  CHECK(std::abs(G.gamma(1, 1, 0) - 0.5) < 1e-12);
  CHECK(std::abs(G.gamma(0, 0, 0)) < 1e-12);

  ChartMetric mfd = m;
  mfd.dg = nullptr;  // force the finite-difference path
  Christoffel Gfd = christoffel_at(mfd, x, 1e-4);
  for (int a = 0; a < 2; ++a)
    CHECK((G.c[a] - Gfd.c[a]).cwiseAbs().maxCoeff() < 1e-9);

  CHECK(std::abs(christoffel_oracle(m, x, 0, 1, 1, 1e-3) - (-2.0)) < 1e-8);
  CHECK(std::abs(christoffel_oracle(m, x, 1, 0, 1, 1e-3) - 0.5) < 1e-8);

  CHECK_THROWS_AS(christoffel_at(mfd, x, 1e-9), StabilityError);
  CHECK_THROWS_AS(christoffel_at(mfd, x, -1.0), InvalidArgument);

  // lower-index symmetry on a generic smooth metric
  ChartMetric smooth;
  smooth.name = "smooth";
  smooth.n = 2;
  smooth.sig = Signature{2, 0};
  smooth.frame_eta = pt(1.0, 1.0);
  smooth.g = [](const RVec& x) {
    RMat g(2, 2);
    const double c = 0.3 * std::sin(x(0) + x(1));
    g << 1.5 + 0.2 * std::sin(x(0)), c, c, 1.4 + 0.2 * std::cos(x(1));
    return g;
  };
  RVec y = pt(0.4, -0.2);
  Christoffel Gs = christoffel_at(smooth, y, 1e-4);
  for (int a = 0; a < 2; ++a)
    CHECK((Gs.c[a] - Gs.c[a].transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(metric_compatibility_residual(smooth, y, Gs, 1e-4) < 1e-6);
}

TEST_CASE("spin connection on the flat polar chart") {
  ChartMetric m = polar_flat_2d();
  MatrixRep rep = frame_rep_for(m);
  REQUIRE(rep.metric_diag(0) == 1.0);
  RVec x = pt(2.0, 0.7);
  SpinConnection sc = spin_connection_at(m, x, rep);

  // radial direction carries no rotation; the angular one is the J generator
  CHECK(sc.omega[0].cwiseAbs().maxCoeff() < 1e-9);
  CHECK(std::abs(sc.omega[1](0, 1) - (-1.0)) < 1e-9);
  for (int mu = 0; mu < 2; ++mu)
    CHECK((sc.omega[mu] + sc.omega[mu].transpose()).cwiseAbs().maxCoeff() ==
          0.0);

  RMat mj(2, 2);
  mj << 0, -1, 1, 0;
  CHECK((sc.a[1] - mj).cwiseAbs().maxCoeff() < 1e-9);

  Mat k = rep.gamma[0] * rep.gamma[1];
  CHECK(dist(sc.Omega[1], -0.5 * k) < 1e-9);
  CHECK(frob(sc.Omega[0]) < 1e-9);

  SUBCASE("the quarter-commutator form agrees") {
    for (const ChartMetric& mm :
         {polar_flat_2d(), frw_1p1(0.05), rindler_1p1(1.0)}) {
      MatrixRep r = frame_rep_for(mm);
      RVec y = mm.name == "polar_flat_2d" ? pt(2.0, 0.7) : pt(0.3, 1.4);
      SpinConnection s = spin_connection_at(mm, y, r);
      for (int mu = 0; mu < 2; ++mu) {
        Mat alt = Mat::Zero(r.d(), r.d());
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            Mat ga = mm.frame_eta(a) * r.gamma[a];  // raised
            Mat gb = mm.frame_eta(b) * r.gamma[b];
            alt += 0.125 * s.omega[mu](a, b) * (ga * gb - gb * ga);
          }
        CHECK(dist(alt, s.Omega[mu]) < 1e-12);
      }
    }
  }

  SUBCASE("constant cartesian vectors are parallel in the polar frame") {
    // v_polar(theta) = R(-theta) v_cart must satisfy v' + A_theta v = 0
    RVec vc = pt(0.8, -0.5);
    double th = 0.7, dth = 1e-5;
    auto vp = [&](double t) {
      RMat r(2, 2);
      r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
      return RVec(r * vc);
    };
    RVec vdot = (vp(th + dth) - vp(th - dth)) / (2.0 * dth);
    RVec resid = vdot + sc.a[1] * vp(th);
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-8);
  }

  SUBCASE("constant cartesian spinors are parallel in the polar frame") {
    Vec psi_c(2);
    psi_c << cx(0.8, 0.1), cx(0.6, -0.2);
    for (double th : {0.3, 1.2, 2.5}) {
      Mat s = expm((th / 2.0) * k);
      Vec psi_p = s * psi_c;
      Vec dpsi = 0.5 * (k * psi_p);  // exact theta derivative
      CHECK((dpsi + sc.Omega[1] * psi_p).norm() < 1e-8);
      CHECK((sc.Omega[0] * psi_p).norm() < 1e-9);
    }
    // a full turn of the flat transport flips the spinor sign
    Mat u = expm(-2.0 * kPi * sc.Omega[1]);
    CHECK(dist(u, -eye(2)) < 1e-7);
  }
}

TEST_CASE("flat charts have zero spin curvature") {
  struct Case {
    ChartMetric m;
    RVec x;
  };
  std::vector<Case> cases;
  cases.push_back({polar_flat_2d(), pt(2.0, 0.7)});
  cases.push_back({rindler_1p1(1.0), pt(0.2, 1.5)});
  cases.push_back({frw_1p1(0.05), pt(0.3, 0.4)});
  for (auto& c : cases) {
    MatrixRep rep = frame_rep_for(c.m);
    CHECK(spin_curvature_residual(c.m, c.x, rep, 1e-3) < 1e-5);
  }
}

TEST_CASE("covariant derivative along curves") {
  ChartMetric flat = minkowski_metric(2);
  MatrixRep rep = frame_rep_for(flat);
  const double dt = 0.01;
  const int nsamp = 21;

  SUBCASE("constant spinor in a flat chart") {
    std::vector<Vec> psi(nsamp, Vec::Constant(2, cx(0.7, -0.3)));
    std::vector<RVec> xs(nsamp, pt(0.0, 0.0));
    auto out = covariant_derivative_spinor(psi, xs, dt, flat, rep);
    REQUIRE(out.size() == std::size_t(nsamp - 2));
    for (const Vec& v : out) CHECK(v.norm() < 1e-12);
  }
  SUBCASE("linear growth differentiates exactly") {
    Vec psi0(2);
    psi0 << cx(1.0, 0.0), cx(0.0, -2.0);
    std::vector<Vec> psi;
    std::vector<RVec> xs;
    for (int i = 0; i < nsamp; ++i) {
      psi.push_back(double(i) * dt * psi0);
      xs.push_back(pt(i * dt, 0.1));
    }
    auto out = covariant_derivative_spinor(psi, xs, dt, flat, rep);
    for (const Vec& v : out) CHECK((v - psi0).norm() < 1e-12);
  }
  SUBCASE("transported spinors annihilate the derivative") {
    ChartMetric m = polar_flat_2d();
    MatrixRep prep = frame_rep_for(m);
    // high-resolution RK4 transport along theta at r = 2 as the oracle
    const int steps = 4000, stride = 40;
    const double tmax = 0.4, hstep = tmax / steps;
    Vec psi(2);
    psi << cx(1.0, 0.0), cx(0.2, 0.5);
    std::vector<Vec> samples;
    std::vector<RVec> xs;
    auto rhs = [&](double t, const Vec& y) -> Vec {
      SpinConnection sc = spin_connection_at(m, pt(2.0, t), prep);
      return -(sc.Omega[1] * y);
    };
    for (int i = 0; i <= steps; ++i) {
      if (i % stride == 0) {
        samples.push_back(psi);
        xs.push_back(pt(2.0, i * hstep));
      }
      const double t = i * hstep;
      Vec k1 = rhs(t, psi);
      Vec k2 = rhs(t + hstep / 2, psi + hstep / 2 * k1);
      Vec k3 = rhs(t + hstep / 2, psi + hstep / 2 * k2);
      Vec k4 = rhs(t + hstep, psi + hstep * k3);
      psi += hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    auto out = covariant_derivative_spinor(samples, xs, hstep * stride, m,
                                           prep);
    for (const Vec& v : out) CHECK(v.norm() < 1e-6);
  }
  SUBCASE("input validation") {
    std::vector<Vec> psi(2, Vec::Zero(2));
    std::vector<RVec> xs(2, pt(0, 0));
    CHECK_THROWS_AS(covariant_derivative_spinor(psi, xs, dt, flat, rep),
                    InvalidArgument);
    std::vector<Vec> psi3(3, Vec::Zero(2));
    CHECK_THROWS_AS(covariant_derivative_spinor(psi3, xs, dt, flat, rep),
                    DimensionMismatch);
  }
}

TEST_CASE("coordinate gammas close on the inverse metric") {
  for (const ChartMetric& m : {polar_flat_2d(), frw_1p1(0.05)}) {
    MatrixRep rep = frame_rep_for(m);
    RVec x = m.name == "polar_flat_2d" ? pt(1.7, 0.4) : pt(0.25, 0.9);
    std::vector<Mat> gup = coordinate_gammas(m, x, rep);
    RMat ginv = m.g(x).inverse();
    for (int mu = 0; mu < 2; ++mu)
      for (int nu = 0; nu < 2; ++nu) {
        Mat anti = gup[mu] * gup[nu] + gup[nu] * gup[mu];
        CHECK(dist(anti, 2.0 * ginv(mu, nu) * eye(rep.d())) < 1e-12);
      }
  }
}

TEST_CASE("curved dirac operator") {
  SUBCASE("flat plane wave reproduces the first-order symbol") {
    ChartMetric m = minkowski_metric(2);
    MatrixRep rep = frame_rep_for(m);
    const double h = 0.01;
    Grid grid = make_grid({9, 9}, pt(h, h), pt(0.0, 0.0));
    Field f = make_field(grid, 2);
    const double k0 = 0.9, k1 = -1.3;
    Vec u(2);
    u << cx(0.6, 0.2), cx(-0.3, 0.7);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        RVec x = grid.point({i, j});
        f.set({i, j}, u * std::exp(cx(0, k0 * x(0) + k1 * x(1))));
      }
    std::vector<int> idx{4, 4};
    Vec got = curved_dirac_apply(f, m, rep, idx);
    std::vector<Mat> gup = coordinate_gammas(m, grid.point(idx), rep);
    Vec want = cx(0, 1) * (k0 * (gup[0] * f.at(idx)) + k1 * (gup[1] * f.at(idx)));
    CHECK((got - want).norm() < 1e-4 * want.norm());

    Field c = make_field(grid, 2);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) c.set({i, j}, u);
    CHECK(curved_dirac_apply(c, m, rep, idx).norm() < 1e-13);

    CHECK_THROWS_AS(curved_dirac_apply(f, m, rep, std::vector<int>{0, 4}),
                    InvalidArgument);
  }
  SUBCASE("chart covariance on the polar grid") {
    ChartMetric m = polar_flat_2d();
    MatrixRep rep = frame_rep_for(m);
    Mat k = rep.gamma[0] * rep.gamma[1];
    Vec psi_c(2);
    psi_c << cx(0.8, 0.1), cx(0.6, -0.2);
    auto residual_at = [&](int npts) {
      const double hr = 0.8 / (npts - 1), hth = 0.8 / (npts - 1);
      Grid grid = make_grid({npts, npts}, pt(hr, hth), pt(1.6, 0.2));
      Field f = make_field(grid, 2);
      for (int i = 0; i < npts; ++i)
        for (int j = 0; j < npts; ++j) {
          RVec x = grid.point({i, j});
          f.set({i, j}, expm((x(1) / 2.0) * k) * psi_c);
        }
      double worst = 0.0;
      for (int i = 1; i < npts - 1; i += 4)
        for (int j = 1; j < npts - 1; j += 4)
          worst = std::max(
              worst, curved_dirac_apply(f, m, rep, {i, j}).norm());
      return worst;
    };
    const double r1 = residual_at(21);
    const double r2 = residual_at(41);
    CHECK(r1 < 1e-3);
    CHECK(r1 / r2 > 3.5);  // second-order stencil
  }
}

TEST_CASE("dalembert factorization against the flux-form laplacian") {
  SUBCASE("quadratics are exact on a flat chart") {
    ChartMetric m = minkowski_metric(2);
    const double h = 0.05;
    Grid grid = make_grid({11, 11}, pt(h, h), pt(-0.25, -0.25));
    Field f = make_field(grid, 1);
    for (int i = 0; i < 11; ++i)
      for (int j = 0; j < 11; ++j) {
        RVec x = grid.point({i, j});
        Vec v(1);
        v << cx(0.3 * x(0) * x(0) + 0.7 * x(1) * x(1) - 0.2 * x(0) * x(1) +
                    0.4 * x(0) - 1.0,
                0.0);
        f.set({i, j}, v);
      }
    CHECK(dalembert_residual(f, m) < 1e-10);
  }
  SUBCASE("frw chart converges at second order") {
    ChartMetric m = frw_1p1(0.05);
    auto residual_at = [&](int npts) {
      const double h = 1.0 / (npts - 1);
      Grid grid = make_grid({npts, npts}, pt(h, h), pt(0.0, 0.0));
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
    const double r64 = residual_at(64);
    const double r128 = residual_at(128);
    const double r256 = residual_at(256);
    const double order1 = std::log2(r64 / r128);
    const double order2 = std::log2(r128 / r256);
    CHECK(order1 > 1.9);
    CHECK(order2 > 1.9);
  }
}

TEST_CASE("field io round trip") {
  Grid grid = make_grid({4, 6}, pt(0.1, 0.2), pt(-1.0, 3.0));
  Field f = make_field(grid, 2);
  Rng rng(83);
  for (Eigen::Index c = 0; c < f.data.rows(); ++c)
    for (Eigen::Index s = 0; s < f.data.cols(); ++s)
      f.data(c, s) = rng.cnormal();
  const std::string base = "/tmp/cliffbundle_test_field";
  save_field(f, base);
  Field g = load_field(base);
  CHECK(g.comps == 2);
  CHECK(g.grid.shape == f.grid.shape);
  CHECK((g.grid.spacing - f.grid.spacing).cwiseAbs().maxCoeff() == 0.0);
  CHECK(dist(g.data, f.data) == 0.0);
  std::remove((base + ".json").c_str());
  std::remove((base + ".f64").c_str());
  CHECK_THROWS_AS(load_field("/tmp/cliffbundle_no_such_field"), IoError);
}

TEST_CASE("metric catalog and json construction") {
  ChartMetric m = metric_from_json(R"({"name":"polar_flat_2d"})");
  CHECK(m.name == "polar_flat_2d");
  CHECK(m.sig.p == 2);

  ChartMetric fr = metric_from_json(R"({"name":"frw_1p1","params":{"eps":0.1}})");
  CHECK(std::abs(fr.g(pt(1.0, 0.0))(1, 1) - 1.21) < 1e-12);

  ChartMetric mk = metric_from_json(R"({"name":"minkowski","params":{"dim":4}})");
  CHECK(mk.n == 4);

  ChartMetric tb = metric_from_json(
      R"({"name":"table","params":{"g":[[2.0,0.0],[0.0,3.0]]}})");
  CHECK(tb.sig.p == 2);
  CHECK(tb.g(pt(9.0, 9.0))(1, 1) == 3.0);

  CHECK_THROWS_AS(metric_from_json(R"({"name":"nope"})"), ParseError);
  CHECK_THROWS_AS(metric_from_json("{"), ParseError);
  CHECK_THROWS_AS(metric_from_json(R"({"params":{}})"), ParseError);

  auto cat = nlohmann::json::parse(metric_catalog_json());
  CHECK(cat.size() == 5);
  CHECK(cat[0]["name"] == "minkowski");

  // no canonical gammas beyond the supported signatures
  ChartMetric odd = table_metric(-RMat::Identity(3, 3));
  CHECK_THROWS_AS(frame_rep_for(odd), InvalidArgument);
}
