#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/gamma.hpp"
#include "core/isomorphism.hpp"
#include "core/rng.hpp"
#include "testutil.hpp"

using namespace cliffbundle;
using namespace cliffbundle::testutil;

namespace {

double relation_residual(const MatrixRep& rep) {
  double worst = 0.0;
  int d = rep.d();
  for (int mu = 0; mu < rep.n; ++mu)
    for (int nu = 0; nu < rep.n; ++nu) {
      Mat anti = rep.gamma[mu] * rep.gamma[nu] + rep.gamma[nu] * rep.gamma[mu];
      double g = mu == nu ? rep.metric_diag(mu) : 0.0;
      worst = std::max(worst, dist(anti, 2.0 * g * eye(d)));
    }
  return worst;
}

}  // namespace

TEST_CASE("dirac representations satisfy their relations") {
  MatrixRep mm = dirac_gammas(Convention::MostlyMinus);
  CHECK(mm.n == 4);
  CHECK(mm.d() == 4);
  CHECK(mm.metric_diag(0) == 1.0);
  CHECK(mm.metric_diag(1) == -1.0);
  CHECK(relation_residual(mm) < 1e-15);

  // gamma_0 diagonal +,+,-,-
  CHECK(mm.gamma[0](0, 0) == cx(1, 0));
  CHECK(mm.gamma[0](2, 2) == cx(-1, 0));
  CHECK(std::abs(mm.gamma[0](0, 2)) == 0.0);

  Mat sq0 = mm.gamma[0] * mm.gamma[0];
  CHECK(dist(sq0, eye(4)) == 0.0);
  Mat sq1 = mm.gamma[1] * mm.gamma[1];
  CHECK(dist(sq1, -eye(4)) == 0.0);

  MatrixRep mp = dirac_gammas(Convention::MostlyPlus);
  CHECK(mp.metric_diag(0) == -1.0);
  CHECK(mp.metric_diag(3) == 1.0);
  CHECK(relation_residual(mp) < 1e-15);
  Mat anti00 = mp.gamma[0] * mp.gamma[0] + mp.gamma[0] * mp.gamma[0];
  CHECK(dist(anti00, -2.0 * eye(4)) == 0.0);
  // gamma_0 stays diagonal in both conventions
  CHECK(std::abs(mp.gamma[0](0, 1)) == 0.0);
  CHECK(std::abs(mp.gamma[0](1, 0)) == 0.0);

  for (Convention c : {Convention::MostlyMinus, Convention::MostlyPlus}) {
    MatrixRep r = dirac_gammas_1p1(c);
    CHECK(r.n == 2);
    CHECK(r.d() == 2);
    CHECK(relation_residual(r) < 1e-15);
  }
  MatrixRep r11 = dirac_gammas_1p1(Convention::MostlyMinus);
  CHECK(dist(r11.gamma[0] * r11.gamma[0], eye(2)) == 0.0);
  CHECK(dist(r11.gamma[1] * r11.gamma[1], -eye(2)) == 0.0);
}

TEST_CASE("dual gammas") {
  MatrixRep mm = dirac_gammas(Convention::MostlyMinus);
  std::vector<Mat> dual = dual_gammas(mm);
  CHECK(dist(dual[0], mm.gamma[0]) == 0.0);
  for (int k = 1; k < 4; ++k) CHECK(dist(dual[k], -mm.gamma[k]) == 0.0);

  Mat contracted = Mat::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) contracted += dual[mu] * mm.gamma[mu];
  CHECK(dist(contracted, 4.0 * eye(4)) < 1e-14);

  MatrixRep r11 = dirac_gammas_1p1(Convention::MostlyPlus);
  std::vector<Mat> dual11 = dual_gammas(r11);
  Mat c11 = dual11[0] * r11.gamma[0] + dual11[1] * r11.gamma[1];
  CHECK(dist(c11, 2.0 * eye(2)) < 1e-14);

  // scaled metric g = 2*eta halves the raised matrices
  RMat g = RMat::Zero(4, 4);
  for (int mu = 0; mu < 4; ++mu) g(mu, mu) = 2.0 * mm.metric_diag(mu);
  std::vector<Mat> dual2 = dual_gammas(mm, g);
  for (int mu = 0; mu < 4; ++mu) CHECK(dist(dual2[mu], 0.5 * dual[mu]) < 1e-14);

  RMat sing = RMat::Zero(4, 4);
  CHECK_THROWS_AS(dual_gammas(mm, sing), SingularOperator);
  RMat skew = RMat::Zero(4, 4);
  skew(0, 1) = 1.0;
  skew(1, 0) = -1.0;
  skew(2, 2) = skew(3, 3) = 1.0;
  CHECK_THROWS_AS(dual_gammas(mm, skew), InvalidArgument);
}

TEST_CASE("sl2c embedding") {
  CHECK(dist(sl2c_embed(eye(2)), eye(4)) == 0.0);

  Rng rng(59);
  for (int rep = 0; rep < 4; ++rep) {
    Mat t = random_complex(rng, 2, 2, 0.7);
    t -= 0.5 * t.trace() * eye(2);  // traceless -> det(exp) = 1
    Mat a = expm(t);
    Mat t2 = random_complex(rng, 2, 2, 0.7);
    t2 -= 0.5 * t2.trace() * eye(2);
    Mat b = expm(t2);
    CHECK(dist(sl2c_embed(a * b), sl2c_embed(a) * sl2c_embed(b)) < 1e-12);
  }

  double th = 0.9;
  Mat a = Mat::Zero(2, 2);
  a(0, 0) = std::exp(cx(0, th / 2));
  a(1, 1) = std::exp(cx(0, -th / 2));
  Mat rho = sl2c_embed(a);
  // direct inversion of the lower block
  Mat lower = (a.adjoint()).inverse();
  CHECK(dist(rho.block(0, 0, 2, 2), a) == 0.0);
  CHECK(dist(rho.block(2, 2, 2, 2), lower) < 1e-15);
  // for this unitary diagonal A the lower block equals A itself
  CHECK(std::abs(rho(2, 2) - a(0, 0)) < 1e-15);
  CHECK(std::abs(rho(3, 3) - a(1, 1)) < 1e-15);

  CHECK_THROWS_AS(sl2c_embed(2.0 * eye(2)), InvalidArgument);
  CHECK_THROWS_AS(sl2c_embed(eye(3)), DimensionMismatch);
}

TEST_CASE("spin rotations and the double cover") {
  MatrixRep mm = dirac_gammas(Convention::MostlyMinus);

  CHECK(dist(spin_rotate(mm, 1, 2, 0.0), eye(4)) < 1e-15);
  Mat full = spin_rotate(mm, 1, 2, 2.0 * kPi);
  CHECK(dist(full, -eye(4)) < 1e-10);
  Mat twice = spin_rotate(mm, 1, 2, 4.0 * kPi);
  CHECK(dist(twice, eye(4)) < 1e-10);

  Mat r1 = spin_rotate(mm, 2, 3, 0.4);
  Mat r2 = spin_rotate(mm, 2, 3, 1.1);
  CHECK(dist(r1 * r2, spin_rotate(mm, 2, 3, 1.5)) < 1e-12);
  CHECK(std::abs(r1.determinant() - cx(1, 0)) < 1e-10);

  // rotations conjugate the spatial gammas as SO(3) vectors; with the
  // minus-square spatial generators the plane turns clockwise in (1,2)
  double th = 0.37;
  Mat s = spin_rotate(mm, 1, 2, th);
  Mat si = s.inverse();
  Mat got1 = si * mm.gamma[1] * s;
  Mat got2 = si * mm.gamma[2] * s;
  CHECK(dist(got1, std::cos(th) * mm.gamma[1] - std::sin(th) * mm.gamma[2]) <
        1e-12);
  CHECK(dist(got2, std::cos(th) * mm.gamma[2] + std::sin(th) * mm.gamma[1]) <
        1e-12);

  CHECK_THROWS_AS(spin_rotate(mm, 0, 1, 0.5), InvalidArgument);
  CHECK_THROWS_AS(spin_rotate(mm, 1, 1, 0.5), InvalidArgument);
  CHECK_THROWS_AS(spin_rotate(mm, 1, 4, 0.5), InvalidArgument);

  // generator antisymmetry
  CHECK(dist(spin_generator(mm, 1, 2), -spin_generator(mm, 2, 1)) == 0.0);
}

TEST_CASE("boosts conjugate gammas by the expected hyperbolic rotation") {
  double chi = 0.3;
  for (const MatrixRep& rep : {dirac_gammas_1p1(Convention::MostlyMinus),
                               dirac_gammas(Convention::MostlyMinus)}) {
    Mat s = spin_transform(rep, 0, 1, chi);
    Mat si = s.inverse();
    Mat got0 = si * rep.gamma[0] * s;
    Mat got1 = si * rep.gamma[1] * s;
    Mat want0 = std::cosh(chi) * rep.gamma[0] + std::sinh(chi) * rep.gamma[1];
    Mat want1 = std::cosh(chi) * rep.gamma[1] + std::sinh(chi) * rep.gamma[0];
    CHECK(dist(got0, want0) < 1e-12);
    CHECK(dist(got1, want1) < 1e-12);
  }
}

TEST_CASE("gamma representations are faithful clifford representations") {
  SUBCASE("mostly-minus as Cl(1,3)") {
    MatrixRep mm = dirac_gammas(Convention::MostlyMinus);
    AlgebraSpec spec = make_algebra(1, 3);
    auto rep = check_matrix_isomorphism(spec, mm.gamma, true);
    CHECK(rep.passed);
    CHECK(rep.blade_rank == 16);
    CHECK(rep.full_algebra_ok);
  }
  SUBCASE("mostly-plus as Cl(3,1), spatial generators first") {
    MatrixRep mp = dirac_gammas(Convention::MostlyPlus);
    AlgebraSpec spec = make_algebra(3, 1);
    std::vector<Mat> gens = {mp.gamma[1], mp.gamma[2], mp.gamma[3],
                             mp.gamma[0]};
    auto rep = check_matrix_isomorphism(spec, gens, true);
    CHECK(rep.passed);
  }
  SUBCASE("1+1 mostly-minus as Cl(1,1)") {
    MatrixRep r11 = dirac_gammas_1p1(Convention::MostlyMinus);
    AlgebraSpec spec = make_algebra(1, 1);
    auto rep = check_matrix_isomorphism(spec, r11.gamma, true);
    CHECK(rep.passed);
    CHECK(rep.blade_rank == 4);
  }
}

TEST_CASE("convention parsing and json dump") {
  CHECK(parse_convention("mm") == Convention::MostlyMinus);
  CHECK(parse_convention("mostly-minus") == Convention::MostlyMinus);
  CHECK(parse_convention("mp") == Convention::MostlyPlus);
  CHECK(parse_convention("mostly-plus") == Convention::MostlyPlus);
  CHECK_THROWS_AS(parse_convention("euclidean"), InvalidArgument);
  CHECK(std::string(convention_name(Convention::MostlyMinus)) ==
        "mostly-minus");

  MatrixRep mm = dirac_gammas(Convention::MostlyMinus);
  auto j = nlohmann::json::parse(rep_to_json(mm));
  CHECK(j["n"] == 4);
  CHECK(j["d"] == 4);
  CHECK(j["convention"] == "mostly-minus");
  CHECK(j["metric"].size() == 4);
  CHECK(double(j["metric"][0]) == 1.0);
  // entries are row-major [re, im] pairs
  auto g0 = j["gammas"][0];
  CHECK(g0.size() == 16);
  CHECK(double(g0[0][0]) == 1.0);
  CHECK(double(g0[0][1]) == 0.0);
}
