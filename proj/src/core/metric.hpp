// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/blade_table.hpp"
#include "core/common.hpp"

namespace cliffbundle {

// Metric field on a coordinate chart. `g` must be pure and reentrant; `dg`
// (partials of g by coordinate, dg(x)[alpha] = d_alpha g) is optional and
// preferred over finite differences when present.
struct ChartMetric {
  std::string name;
  int n = 0;
  Signature sig;   // p positive, q negative metric eigenvalues
  RVec frame_eta;  // frame metric, negative axes first
  std::function<RMat(const RVec&)> g;
  std::function<std::vector<RMat>(const RVec&)> dg;

  bool has_dg() const { return static_cast<bool>(dg); }
};

// symmetric to 1e-14 and eigenvalue signs match sig; returns g(x)
RMat metric_validate_at(const ChartMetric& m, const RVec& x);

ChartMetric minkowski_metric(int n);
ChartMetric polar_flat_2d();           // diag(1, r^2), coords (r, theta)
ChartMetric frw_1p1(double eps);       // diag(-1, (1 + eps t)^2), coords (t, x)
ChartMetric rindler_1p1(double a);     // diag(-(a x)^2, 1), coords (t, x)
ChartMetric table_metric(const RMat& g);  // constant metric

// {"name":..., "dim":n, "kind":"builtin|table", "params":{...}}
ChartMetric metric_from_json(const std::string& text);
std::string metric_catalog_json();

}  // namespace cliffbundle
