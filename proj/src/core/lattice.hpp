// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace cliffbundle {

// Regular chart-aligned grid, row-major flattening (last axis fastest).
struct Grid {
  std::vector<int> shape;
  RVec spacing;
  RVec origin;

  int dim() const { return int(shape.size()); }
  std::size_t size() const;
  std::size_t flat(const std::vector<int>& idx) const;
  RVec point(const std::vector<int>& idx) const;
};

Grid make_grid(std::vector<int> shape, RVec spacing, RVec origin);

// Complex multi-component field over a grid; data(c, site).
struct Field {
  Grid grid;
  int comps = 1;
  Mat data;

  Vec at(const std::vector<int>& idx) const {
    return data.col(Eigen::Index(grid.flat(idx)));
  }
  void set(const std::vector<int>& idx, const Vec& v) {
    data.col(Eigen::Index(grid.flat(idx))) = v;
  }
};

Field make_field(Grid grid, int comps);

// writes base + ".json" (dims, spacing, origin, comps) and base + ".f64"
// (interleaved re,im per component, site-major)
void save_field(const Field& f, const std::string& base);
Field load_field(const std::string& base);

inline int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace cliffbundle
