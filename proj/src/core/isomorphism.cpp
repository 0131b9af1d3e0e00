// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/isomorphism.hpp"

namespace cliffbundle {

Mat blade_image(const std::vector<Mat>& generators, std::uint32_t blade) {
  if (generators.empty()) throw InvalidArgument("blade_image: no generators");
  const Eigen::Index d = generators[0].rows();
  Mat acc = Mat::Identity(d, d);
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (blade & (std::uint32_t(1) << i)) acc = acc * generators[i];
  return acc;
}

IsomorphismReport check_matrix_isomorphism(const AlgebraSpec& spec,
                                           const std::vector<Mat>& generators,
                                           bool claim_full_algebra,
                                           double tol) {
  IsomorphismReport rep;
  rep.n = spec.n();
  rep.full_algebra_claimed = claim_full_algebra;

  if (static_cast<int>(generators.size()) != spec.n())
    throw DimensionMismatch(
        "check_matrix_isomorphism: generator count does not match signature");
  if (generators.empty())
    throw InvalidArgument("check_matrix_isomorphism: empty generator list");
  const Eigen::Index d = generators[0].rows();
  for (const Mat& g : generators)
    if (g.rows() != d || g.cols() != d)
      throw DimensionMismatch(
          "check_matrix_isomorphism: generators must be square and same size");
  rep.d = static_cast<int>(d);
  rep.matrix_algebra_dim = static_cast<int>(d * d);

  const Mat id = Mat::Identity(d, d);
  const Signature& sig = spec.signature();

  // (i) anticommutation relations against the diagonal metric
  double rel = 0.0;
  for (int i = 0; i < spec.n(); ++i) {
    for (int j = i; j < spec.n(); ++j) {
      const double gij = (i == j) ? sig.metric_sign(i) : 0.0;
      Mat r = generators[i] * generators[j] + generators[j] * generators[i] -
              2.0 * gij * id;
      rel = std::max(rel, frob(r));
    }
  }
  rep.relation_residual = rel;
  rep.relations_ok = rel <= tol;

  // (ii) independence of all blade images
  const std::uint32_t m = spec.dim();
  std::vector<Mat> images(m);
  Mat span(d * d, m);
  for (std::uint32_t blade = 0; blade < m; ++blade) {
    images[blade] = blade_image(generators, blade);
    span.col(blade) = Eigen::Map<const Vec>(images[blade].data(), d * d);
  }
  rep.blade_rank = column_rank(span);
  rep.expected_rank = static_cast<int>(m);
  rep.independent = rep.blade_rank == rep.expected_rank;

  // (iii) matrix blade products must reproduce the sign table; quadratic in
  // the blade count, so capped at n <= 6
  if (spec.n() <= 6) {
    const BladeTable& t = *spec.table;
    double prod = 0.0;
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b) {
        Mat r = images[a] * images[b] -
                static_cast<double>(t.sign(a, b)) * images[a ^ b];
        prod = std::max(prod, r.cwiseAbs().maxCoeff());
      }
    rep.product_residual = prod;
    rep.products_ok = prod <= tol;
  } else {
    rep.products_ok = true;  // skipped; independence + relations still hold
  }

  rep.full_algebra_ok =
      !claim_full_algebra || rep.blade_rank == rep.matrix_algebra_dim;
  rep.passed = rep.relations_ok && rep.independent && rep.products_ok &&
               rep.full_algebra_ok;
  return rep;
}

}  // namespace cliffbundle
