#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "testutil.hpp"

using namespace cliffbundle;
using namespace cliffbundle::testutil;

TEST_CASE("expm closed forms") {
  SUBCASE("zero matrix") {
    Mat z = Mat::Zero(3, 3);
    CHECK(dist(expm(z), eye(3)) < 1e-15);
  }
  SUBCASE("nilpotent") {
    Mat a = Mat::Zero(2, 2);
    a(0, 1) = 1.0;
    Mat e = eye(2);
    e(0, 1) = 1.0;  // series terminates at first order
    CHECK(dist(expm(a), e) < 1e-15);
  }
  SUBCASE("diagonal") {
    Mat a = Mat::Zero(3, 3);
    a(0, 0) = cx(0.3, 0.0);
    a(1, 1) = cx(-1.7, 0.0);
    a(2, 2) = cx(0.0, 2.0);
    Mat e = expm(a);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(e(i, i) - std::exp(a(i, i))) < 1e-14);
    }
    CHECK(std::abs(e(0, 1)) == 0.0);
  }
  SUBCASE("planar rotation") {
    double th = 0.8137;
    Mat j = Mat::Zero(2, 2);
    j(0, 1) = -1.0;
    j(1, 0) = 1.0;
    Mat r = expm(th * j);
    CHECK(std::abs(r(0, 0).real() - std::cos(th)) < 1e-14);
    CHECK(std::abs(r(0, 1).real() + std::sin(th)) < 1e-14);
    CHECK(std::abs(r(1, 0).real() - std::sin(th)) < 1e-14);
    CHECK(std::abs(r(1, 1).real() - std::cos(th)) < 1e-14);
  }
}

TEST_CASE("expm vs spectral oracle on hermitian inputs") {
  Rng rng(41);
  for (int d : {2, 4, 8}) {
    for (double scale : {0.1, 1.0, 25.0}) {  // large scale forces squaring
      Mat h = random_hermitian(rng, d, scale);
      Mat got = expm(h);
      Mat want = expm_hermitian_oracle(h);
      CHECK(dist(got, want) / want.norm() < 1e-12);
      // skew-hermitian: exp(i h) must be unitary
      Mat u = expm(cx(0, 1) * h);
      CHECK(dist(u.adjoint() * u, eye(d)) < 1e-12);
      Mat uw = expm_hermitian_oracle(h, cx(0, 1));
      CHECK(dist(u, uw) < 1e-11 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("expm respects commuting splits") {
  Rng rng(7);
  Mat h = random_hermitian(rng, 4, 0.9);
  Mat a = 0.3 * h;
  Mat b = h * h;  // commutes with a
  CHECK(dist(expm(a + b), expm(a) * expm(b)) < 1e-12 * expm(a + b).norm());
}

TEST_CASE("norms and residuals") {
  Mat a(2, 2);
  a << cx(3, 0), cx(0, -4), cx(0, 0), cx(1, 0);
  CHECK(std::abs(frob(a) - std::sqrt(26.0)) < 1e-14);
  CHECK(std::abs(norm1(a) - 5.0) < 1e-14);  // column 1: |−4i|+|1|

  Rng rng(3);
  Mat h = random_hermitian(rng, 5, 2.0);
  CHECK(hermiticity_residual(h) < 1e-14);
  Mat g = h;
  g(0, 1) += cx(0.0, 1e-3);
  CHECK(hermiticity_residual(g) > 1e-4);
}

TEST_CASE("cond2 and column rank") {
  Mat d = Mat::Zero(3, 3);
  d(0, 0) = 10.0;
  d(1, 1) = 1.0;
  d(2, 2) = 0.1;
  CHECK(std::abs(cond2(d) - 100.0) < 1e-9);

  Mat m(3, 3);
  m.col(0) = Vec::Constant(3, cx(1, 0));
  m.col(1) = Vec::Constant(3, cx(2, 0));  // dependent
  m.col(2) << cx(0, 0), cx(1, 0), cx(0, 0);
  CHECK(column_rank(m) == 2);
  CHECK(column_rank(Mat::Identity(4, 4)) == 4);
  CHECK(column_rank(Mat::Zero(4, 2)) == 0);
}

TEST_CASE("kron mixed-product identity") {
  Rng rng(11);
  Mat a = random_complex(rng, 2, 2);
  Mat b = random_complex(rng, 3, 3);
  Mat c = random_complex(rng, 2, 2);
  Mat d = random_complex(rng, 3, 3);
  CHECK(dist(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  CHECK(kron(a, b).rows() == 6);
  // kron(I, I) = I
  CHECK(dist(kron(eye(2), eye(3)), eye(6)) == 0.0);
}

TEST_CASE("seeded randomness is deterministic and well formed") {
  Rng r1(123), r2(123);
  CHECK(r1.raw() == r2.raw());
  CHECK(r1.uniform() == r2.uniform());
  CHECK(r1.normal() == r2.normal());
  CHECK(std::string(Rng::algorithm()) == "mt19937_64+box-muller");

  Rng r3(123);
  r3.raw();
  r3.uniform();
  r3.normal();
  Mat u1 = random_unitary(r1, 4);
  Mat u2 = random_unitary(r3, 4);
  CHECK(dist(u1, u2) == 0.0);
  CHECK(dist(u1.adjoint() * u1, eye(4)) < 1e-13);

  Mat h = random_hermitian(r1, 4, 3.0);
  CHECK(hermiticity_residual(h) < 1e-14);
  CHECK(std::abs(frob(h) - 3.0) < 1e-12);

  // box-muller sample moments at a fixed seed; loose statistical bounds
  Rng r4(99);
  double s1 = 0.0, s2 = 0.0;
  const int nsamp = 20000;
  for (int i = 0; i < nsamp; ++i) {
    double x = r4.normal();
    s1 += x;
    s2 += x * x;
  }
  CHECK(std::abs(s1 / nsamp) < 0.03);
  CHECK(std::abs(s2 / nsamp - 1.0) < 0.05);

  Rng r5(5);
  for (int i = 0; i < 200; ++i) CHECK(r5.below(7) < 7);
}
