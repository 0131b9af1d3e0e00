// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/metric.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include <json.hpp>

namespace cliffbundle {

namespace {

RVec eta_for(Signature sig) {
  RVec eta(sig.n());
  for (int i = 0; i < sig.q; ++i) eta(i) = -1.0;
  for (int i = sig.q; i < sig.n(); ++i) eta(i) = 1.0;
  return eta;
}

ChartMetric make_constant(std::string name, Signature sig, const RMat& g) {
  ChartMetric m;
  m.name = std::move(name);
  m.n = int(g.rows());
  m.sig = sig;
  m.frame_eta = eta_for(sig);
  m.g = [g](const RVec&) { return g; };
  const int n = int(g.rows());
  m.dg = [n](const RVec&) { return std::vector<RMat>(n, RMat::Zero(n, n)); };
  return m;
}

Signature signature_of_constant(const RMat& g) {
  Eigen::SelfAdjointEigenSolver<RMat> es(g, Eigen::EigenvaluesOnly);
  Signature sig{0, 0};
  for (int i = 0; i < g.rows(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) < 1e-12)
      throw SingularOperator("table metric has a near-zero eigenvalue");
    (lam > 0 ? sig.p : sig.q) += 1;
  }
  return sig;
}

}  // namespace

RMat metric_validate_at(const ChartMetric& m, const RVec& x) {
  if (x.size() != m.n)
    throw DimensionMismatch("metric point has the wrong dimension");
  RMat g = m.g(x);
  if (g.rows() != m.n || g.cols() != m.n)
    throw DimensionMismatch("metric callback returned a wrong-size matrix");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw InvalidArgument("metric is not symmetric at the sampled point");
  Eigen::SelfAdjointEigenSolver<RMat> es(g, Eigen::EigenvaluesOnly);
  int pos = 0, neg = 0;
  for (int i = 0; i < m.n; ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) < 1e-12 * scale)
      throw SingularOperator("metric is singular at the sampled point");
    (lam > 0 ? pos : neg) += 1;
  }
  if (pos != m.sig.p || neg != m.sig.q)
    throw SignatureMismatch("metric eigenvalue signs do not match signature");
  return g;
}

ChartMetric minkowski_metric(int n) {
  if (n != 2 && n != 4)
    throw InvalidArgument("minkowski metric: dimension must be 2 or 4");
  RMat g = RMat::Identity(n, n);
  g(0, 0) = -1.0;
  ChartMetric m = make_constant("minkowski", Signature{n - 1, 1}, g);
  return m;
}

ChartMetric polar_flat_2d() {
  ChartMetric m;
  m.name = "polar_flat_2d";
  m.n = 2;
  m.sig = Signature{2, 0};
  m.frame_eta = eta_for(m.sig);
  m.g = [](const RVec& x) {
    RMat g = RMat::Zero(2, 2);
    g(0, 0) = 1.0;
    g(1, 1) = x(0) * x(0);
    return g;
  };
  m.dg = [](const RVec& x) {
    std::vector<RMat> d(2, RMat::Zero(2, 2));
    d[0](1, 1) = 2.0 * x(0);
    return d;
  };
  return m;
}

ChartMetric frw_1p1(double eps) {
  ChartMetric m;
  m.name = "frw_1p1";
  m.n = 2;
  m.sig = Signature{1, 1};
  m.frame_eta = eta_for(m.sig);
  m.g = [eps](const RVec& x) {
    const double a = 1.0 + eps * x(0);
    RMat g = RMat::Zero(2, 2);
    g(0, 0) = -1.0;
    g(1, 1) = a * a;
    return g;
  };
  m.dg = [eps](const RVec& x) {
    const double a = 1.0 + eps * x(0);
    std::vector<RMat> d(2, RMat::Zero(2, 2));
    d[0](1, 1) = 2.0 * a * eps;
    return d;
  };
  return m;
}

ChartMetric rindler_1p1(double a) {
  if (a <= 0.0) throw InvalidArgument("rindler metric: acceleration must be positive");
  ChartMetric m;
  m.name = "rindler_1p1";
  m.n = 2;
  m.sig = Signature{1, 1};
  m.frame_eta = eta_for(m.sig);
  m.g = [a](const RVec& x) {
    RMat g = RMat::Zero(2, 2);
    g(0, 0) = -(a * x(1)) * (a * x(1));
    g(1, 1) = 1.0;
    return g;
  };
  m.dg = [a](const RVec& x) {
    std::vector<RMat> d(2, RMat::Zero(2, 2));
    d[1](0, 0) = -2.0 * a * a * x(1);
    return d;
  };
  return m;
}

ChartMetric table_metric(const RMat& g) {
  if (g.rows() != g.cols() || g.rows() < 1)
    throw InvalidArgument("table metric must be square");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() >
      1e-14 * std::max(1.0, g.cwiseAbs().maxCoeff()))
    throw InvalidArgument("table metric must be symmetric");
  return make_constant("table", signature_of_constant(g), g);
}

ChartMetric metric_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("metric JSON: ") + e.what());
  }
  if (!j.contains("name") || !j["name"].is_string())
    throw ParseError("metric JSON: missing \"name\"");
  const std::string name = j["name"].get<std::string>();
  const nlohmann::json params =
      j.contains("params") ? j["params"] : nlohmann::json::object();
  try {
    if (name == "minkowski") return minkowski_metric(params.value("dim", 2));
    if (name == "polar_flat_2d") return polar_flat_2d();
    if (name == "frw_1p1") return frw_1p1(params.value("eps", 0.05));
    if (name == "rindler_1p1") return rindler_1p1(params.value("a", 1.0));
    if (name == "table") {
      if (!params.contains("g") || !params["g"].is_array())
        throw ParseError("metric JSON: table kind needs params.g rows");
      const auto& rows = params["g"];
      const int n = int(rows.size());
      RMat g(n, n);
      for (int r = 0; r < n; ++r) {
        if (!rows[r].is_array() || int(rows[r].size()) != n)
          throw ParseError("metric JSON: params.g must be a square array");
        for (int c = 0; c < n; ++c) g(r, c) = rows[r][c].get<double>();
      }
      return table_metric(g);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("metric JSON: ") + e.what());
  }
  throw ParseError("metric JSON: unknown metric name \"" + name + "\"");
}

std::string metric_catalog_json() {
  nlohmann::ordered_json cat = nlohmann::ordered_json::array();
  cat.push_back({{"name", "minkowski"},
                 {"dim", 2},
                 {"kind", "builtin"},
                 {"params", {{"dim", "2 or 4"}}}});
  cat.push_back({{"name", "polar_flat_2d"},
                 {"dim", 2},
                 {"kind", "builtin"},
                 {"params", nlohmann::ordered_json::object()}});
  cat.push_back({{"name", "frw_1p1"},
                 {"dim", 2},
                 {"kind", "builtin"},
                 {"params", {{"eps", "expansion rate, a(t) = 1 + eps t"}}}});
  cat.push_back({{"name", "rindler_1p1"},
                 {"dim", 2},
                 {"kind", "builtin"},
                 {"params", {{"a", "proper acceleration"}}}});
  cat.push_back({{"name", "table"},
                 {"dim", 0},
                 {"kind", "table"},
                 {"params", {{"g", "constant symmetric matrix, row major"}}}});
  return cat.dump(2);
}

}  // namespace cliffbundle
