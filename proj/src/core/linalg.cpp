// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/linalg.hpp"

#include <cmath>

namespace cliffbundle {

double frob(const Mat& a) { return a.norm(); }

double norm1(const Mat& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

double hermiticity_residual(const Mat& a) {
  return (a - a.adjoint()).norm();
}

double cond2(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= 0.0) return INFINITY;
  return s(0) / s(s.size() - 1);
}

int column_rank(const Mat& a, double rtol) {
  if (a.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Mat> qr(a);
  qr.setThreshold(rtol);
  return static_cast<int>(qr.rank());
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat expm(const Mat& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("expm: matrix must be square");
  const Eigen::Index d = a.rows();
  if (d == 0) return a;

  // Pade(13) coefficients
  static const double b[] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const double theta13 = 5.371920351148152;

  const double nrm = norm1(a);
  int s = 0;
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  }
  Mat x = a / std::pow(2.0, s);

  const Mat id = Mat::Identity(d, d);
  const Mat x2 = x * x;
  const Mat x4 = x2 * x2;
  const Mat x6 = x2 * x4;

  Mat u = x * (x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 +
               b[5] * x4 + b[3] * x2 + b[1] * id);
  Mat v = x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 +
          b[2] * x2 + b[0] * id;

  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

Mat random_complex(Rng& rng, int rows, int cols, double scale) {
  Mat m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = scale * rng.cnormal();
  return m;
}

Mat random_hermitian(Rng& rng, int d, double scale) {
  Mat g = random_complex(rng, d, d);
  Mat h = 0.5 * (g + g.adjoint());
  // normalize so the Frobenius norm is ~scale regardless of d
  const double f = h.norm();
  if (f > 0) h *= scale / f;
  return h;
}

Mat random_unitary(Rng& rng, int d) {
  Mat g = random_complex(rng, d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phase convention so the factorization is unique
  for (int i = 0; i < d; ++i) {
    cx rii = r(i, i);
    cx ph = (std::abs(rii) > 0) ? rii / std::abs(rii) : cx(1, 0);
    q.col(i) *= ph;
  }
  return q;
}

}  // namespace cliffbundle
