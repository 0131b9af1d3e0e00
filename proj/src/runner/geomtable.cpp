// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "runner/geomtable.hpp"

#include <json.hpp>
#include <sstream>

#include "core/geometry.hpp"
#include "runner/report.hpp"

namespace cliffbundle {

std::string geometry_table_csv(const ChartMetric& m,
                               const std::vector<RVec>& points) {
  const int n = m.n;
  std::ostringstream o;
  for (int mu = 0; mu < n; ++mu) o << (mu ? "," : "") << "x" << mu;
  for (int a = 0; a < n; ++a)
    for (int mu = 0; mu < n; ++mu) o << ",e_" << a << "_" << mu;
  for (int al = 0; al < n; ++al)
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        o << ",Gamma_" << al << "_" << mu << "_" << nu;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int mu = 0; mu < n; ++mu)
        o << ",omega_" << a << "_" << b << "_" << mu;
  o << "\n";

  const MatrixRep rep = frame_rep_for(m);
  for (const RVec& x : points) {
    if (x.size() != n)
      throw DimensionMismatch("point dimension does not match the chart");
    Vierbein vb = vierbein_at(m, x);
    Christoffel ch = christoffel_at(m, x);
    SpinConnection sc = spin_connection_at(m, x, rep);
    for (int mu = 0; mu < n; ++mu)
      o << (mu ? "," : "") << format_double(x(mu));
    for (int a = 0; a < n; ++a)
      for (int mu = 0; mu < n; ++mu) o << "," << format_double(vb.e(a, mu));
    for (int al = 0; al < n; ++al)
      for (int mu = 0; mu < n; ++mu)
        for (int nu = 0; nu < n; ++nu)
          o << "," << format_double(ch.gamma(al, mu, nu));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int mu = 0; mu < n; ++mu)
          o << "," << format_double(sc.omega[mu](a, b));
    o << "\n";
  }
  return o.str();
}

std::string geometry_table_from_config(const std::string& config_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(config_json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("geometry config: ") + e.what());
  }
  const nlohmann::json mj = j.contains("metric") ? j["metric"] : j;
  ChartMetric m = metric_from_json(mj.dump());

  std::vector<RVec> points;
  try {
    if (j.contains("points")) {
      for (const auto& row : j["points"]) {
        RVec x(int(row.size()));
        for (int i = 0; i < x.size(); ++i) x(i) = row[i].get<double>();
        points.push_back(x);
      }
    }
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      if (!g.contains("shape"))
        throw ParseError("geometry config: grid needs a shape");
      std::vector<int> shape = g["shape"].get<std::vector<int>>();
      if (int(shape.size()) != m.n)
        throw ParseError("geometry config: grid rank must match the chart");
      RVec spacing = RVec::Ones(m.n);
      RVec origin = RVec::Zero(m.n);
      if (g.contains("spacing"))
        for (int i = 0; i < m.n; ++i) spacing(i) = g["spacing"][i].get<double>();
      if (g.contains("origin"))
        for (int i = 0; i < m.n; ++i) origin(i) = g["origin"][i].get<double>();
      std::vector<int> idx(shape.size(), 0);
      for (;;) {
        RVec x(m.n);
        for (int i = 0; i < m.n; ++i) x(i) = origin(i) + idx[i] * spacing(i);
        points.push_back(x);
        int axis = m.n - 1;
        while (axis >= 0 && ++idx[axis] == shape[axis]) idx[axis--] = 0;
        if (axis < 0) break;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("geometry config: ") + e.what());
  }
  if (points.empty())
    throw ParseError("geometry config: no points or grid given");
  return geometry_table_csv(m, points);
}

}  // namespace cliffbundle
