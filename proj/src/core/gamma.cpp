// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/gamma.hpp"

#include <json.hpp>

namespace cliffbundle {

Convention parse_convention(const std::string& s) {
  if (s == "mm" || s == "mostly-minus") return Convention::MostlyMinus;
  if (s == "mp" || s == "mostly-plus") return Convention::MostlyPlus;
  throw InvalidArgument("unknown metric convention: " + s);
}

const char* convention_name(Convention c) {
  return c == Convention::MostlyMinus ? "mostly-minus" : "mostly-plus";
}

namespace {

Mat pauli(int k) {
  Mat s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cx(0, -1), cx(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw InvalidArgument("pauli: index must be 1..3");
  }
  return s;
}

MatrixRep finish(int nn, Convention conv, std::vector<Mat> gam) {
  MatrixRep rep;
  rep.n = nn;
  rep.conv = conv;
  rep.metric_diag = RVec(nn);
  const double t = conv == Convention::MostlyMinus ? +1.0 : -1.0;
  rep.metric_diag(0) = t;
  for (int i = 1; i < nn; ++i) rep.metric_diag(i) = -t;
  if (conv == Convention::MostlyPlus)
    for (Mat& g : gam) g *= cx(0, 1);
  rep.gamma = std::move(gam);
  return rep;
}

}  // namespace

MatrixRep dirac_gammas(Convention conv) {
  std::vector<Mat> gam(4, Mat::Zero(4, 4));
  gam[0] << 1, 0, 0, 0,
            0, 1, 0, 0,
            0, 0, -1, 0,
            0, 0, 0, -1;
  for (int k = 1; k <= 3; ++k) {
    Mat s = pauli(k);
    gam[k].block<2, 2>(0, 2) = s;
    gam[k].block<2, 2>(2, 0) = -s;
  }
  return finish(4, conv, std::move(gam));
}

MatrixRep dirac_gammas_1p1(Convention conv) {
  std::vector<Mat> gam(2, Mat::Zero(2, 2));
  gam[0] = pauli(3);
  gam[1] << 0, 1, -1, 0;  // i * pauli_2, kept real
  return finish(2, conv, std::move(gam));
}

std::vector<Mat> dual_gammas(const MatrixRep& rep) {
  std::vector<Mat> up(rep.n);
  for (int mu = 0; mu < rep.n; ++mu)
    up[mu] = rep.gamma[mu] / rep.metric_diag(mu);  // diagonal metric inverse
  return up;
}

std::vector<Mat> dual_gammas(const MatrixRep& rep, const RMat& g) {
  if (g.rows() != rep.n || g.cols() != rep.n)
    throw DimensionMismatch("dual_gammas: metric size does not match rep");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1 + g.norm()))
    throw InvalidArgument("dual_gammas: metric must be symmetric");
  Eigen::FullPivLU<RMat> lu(g);
  if (!lu.isInvertible())
    throw SingularOperator("dual_gammas: metric is singular");
  RMat ginv = lu.inverse();
  std::vector<Mat> up(rep.n);
  for (int mu = 0; mu < rep.n; ++mu) {
    Mat acc = Mat::Zero(rep.d(), rep.d());
    for (int nu = 0; nu < rep.n; ++nu) acc += ginv(mu, nu) * rep.gamma[nu];
    up[mu] = acc;
  }
  return up;
}

Mat sl2c_embed(const Mat& a) {
  if (a.rows() != 2 || a.cols() != 2)
    throw DimensionMismatch("sl2c_embed: input must be 2x2");
  const cx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (std::abs(det - cx(1, 0)) > 1e-10)
    throw InvalidArgument("sl2c_embed: determinant must be 1 to 1e-10");
  Mat out = Mat::Zero(4, 4);
  out.block<2, 2>(0, 0) = a;
  out.block<2, 2>(2, 2) = a.adjoint().inverse();
  return out;
}

Mat spin_generator(const MatrixRep& rep, int mu, int nu) {
  if (mu < 0 || mu >= rep.n || nu < 0 || nu >= rep.n)
    throw InvalidArgument("spin_generator: index out of range");
  return 0.25 * (rep.gamma[mu] * rep.gamma[nu] - rep.gamma[nu] * rep.gamma[mu]);
}

Mat spin_rotate(const MatrixRep& rep, int j, int k, double angle) {
  if (j == k) throw InvalidArgument("spin_rotate: plane indices must differ");
  if (j < 1 || k < 1 || j >= rep.n || k >= rep.n)
    throw InvalidArgument("spin_rotate: indices must be spatial (>= 1)");
  return expm(angle * spin_generator(rep, j, k));
}

Mat spin_transform(const MatrixRep& rep, int mu, int nu, double angle) {
  if (mu == nu)
    throw InvalidArgument("spin_transform: plane indices must differ");
  return expm(angle * spin_generator(rep, mu, nu));
}

std::string rep_to_json(const MatrixRep& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["d"] = rep.d();
  j["convention"] = convention_name(rep.conv);
  j["metric"] = std::vector<double>(rep.metric_diag.data(),
                                    rep.metric_diag.data() + rep.n);
  nlohmann::ordered_json gs = nlohmann::ordered_json::array();
  for (const Mat& g : rep.gamma) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < g.rows(); ++r)
      for (Eigen::Index c = 0; c < g.cols(); ++c)
        rows.push_back({g(r, c).real(), g(r, c).imag()});
    gs.push_back(std::move(rows));
  }
  j["gammas"] = std::move(gs);
  return j.dump();
}

}  // namespace cliffbundle
