#pragma once

#include <Eigen/Dense>
#include <complex>

#include "core/common.hpp"

namespace cliffbundle::testutil {

inline double dist(const Mat& a, const Mat& b) { return (a - b).norm(); }

inline Mat eye(int d) { return Mat::Identity(d, d); }

// independent exponential for normal matrices: unitary diagonalization of
// the Hermitian/skew-Hermitian parts is not available in general, so this
// oracle restricts to Hermitian h and exponentiates exp(s*h) spectrally
inline Mat expm_hermitian_oracle(const Mat& h, cx s = cx(1.0, 0.0)) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Mat v = es.eigenvectors();
  Vec lam = es.eigenvalues().cast<cx>();
  Mat d = Mat::Zero(h.rows(), h.cols());
  for (int i = 0; i < h.rows(); ++i) d(i, i) = std::exp(s * lam(i));
  return v * d * v.adjoint();
}

}  // namespace cliffbundle::testutil
