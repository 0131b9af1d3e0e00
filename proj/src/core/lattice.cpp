// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/lattice.hpp"

#include <fstream>

#include <json.hpp>

namespace cliffbundle {

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int d : shape) s *= std::size_t(d);
  return s;
}

std::size_t Grid::flat(const std::vector<int>& idx) const {
  if (int(idx.size()) != dim())
    throw DimensionMismatch("grid index has the wrong rank");
  std::size_t f = 0;
  for (int a = 0; a < dim(); ++a) {
    if (idx[a] < 0 || idx[a] >= shape[a])
      throw InvalidArgument("grid index out of range");
    f = f * std::size_t(shape[a]) + std::size_t(idx[a]);
  }
  return f;
}

RVec Grid::point(const std::vector<int>& idx) const {
  flat(idx);  // range check
  RVec x(dim());
  for (int a = 0; a < dim(); ++a) x(a) = origin(a) + spacing(a) * idx[a];
  return x;
}

Grid make_grid(std::vector<int> shape, RVec spacing, RVec origin) {
  if (shape.empty() || int(spacing.size()) != int(shape.size()) ||
      int(origin.size()) != int(shape.size()))
    throw InvalidArgument("grid: shape/spacing/origin ranks disagree");
  for (int d : shape)
    if (d < 1) throw InvalidArgument("grid: axis size must be positive");
  for (int a = 0; a < int(shape.size()); ++a)
    if (!(spacing(a) > 0.0)) throw InvalidArgument("grid: spacing must be positive");
  return Grid{std::move(shape), std::move(spacing), std::move(origin)};
}

Field make_field(Grid grid, int comps) {
  if (comps < 1) throw InvalidArgument("field: need at least one component");
  Field f;
  f.grid = std::move(grid);
  f.comps = comps;
  f.data = Mat::Zero(comps, Eigen::Index(f.grid.size()));
  return f;
}

void save_field(const Field& f, const std::string& base) {
  nlohmann::ordered_json h;
  h["dims"] = f.grid.shape;
  h["spacing"] = std::vector<double>(f.grid.spacing.data(),
                                     f.grid.spacing.data() + f.grid.dim());
  h["origin"] = std::vector<double>(f.grid.origin.data(),
                                    f.grid.origin.data() + f.grid.dim());
  h["comps"] = f.comps;
  h["payload"] = base.substr(base.find_last_of('/') + 1) + ".f64";
  std::ofstream hj(base + ".json");
  if (!hj) throw IoError("cannot write field header " + base + ".json");
  hj << h.dump(2) << "\n";

  std::ofstream bin(base + ".f64", std::ios::binary);
  if (!bin) throw IoError("cannot write field payload " + base + ".f64");
  const std::size_t sites = f.grid.size();
  std::vector<double> row(2 * std::size_t(f.comps));
  for (std::size_t s = 0; s < sites; ++s) {
    for (int c = 0; c < f.comps; ++c) {
      const cx v = f.data(c, Eigen::Index(s));
      row[2 * c] = v.real();
      row[2 * c + 1] = v.imag();
    }
    bin.write(reinterpret_cast<const char*>(row.data()),
              std::streamsize(row.size() * sizeof(double)));
  }
  if (!bin) throw IoError("short write on field payload " + base + ".f64");
}

Field load_field(const std::string& base) {
  std::ifstream hj(base + ".json");
  if (!hj) throw IoError("cannot read field header " + base + ".json");
  nlohmann::json h;
  try {
    hj >> h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field header: ") + e.what());
  }
  if (!h.contains("dims") || !h.contains("spacing") || !h.contains("origin") ||
      !h.contains("comps"))
    throw ParseError("field header: missing dims/spacing/origin/comps");
  std::vector<int> shape = h["dims"].get<std::vector<int>>();
  std::vector<double> sp = h["spacing"].get<std::vector<double>>();
  std::vector<double> org = h["origin"].get<std::vector<double>>();
  RVec spacing = Eigen::Map<RVec>(sp.data(), Eigen::Index(sp.size()));
  RVec origin = Eigen::Map<RVec>(org.data(), Eigen::Index(org.size()));
  Field f = make_field(make_grid(shape, spacing, origin), h["comps"].get<int>());

  std::ifstream bin(base + ".f64", std::ios::binary);
  if (!bin) throw IoError("cannot read field payload " + base + ".f64");
  const std::size_t sites = f.grid.size();
  std::vector<double> row(2 * std::size_t(f.comps));
  for (std::size_t s = 0; s < sites; ++s) {
    bin.read(reinterpret_cast<char*>(row.data()),
             std::streamsize(row.size() * sizeof(double)));
    if (!bin) throw IoError("field payload truncated: " + base + ".f64");
    for (int c = 0; c < f.comps; ++c)
      f.data(c, Eigen::Index(s)) = cx(row[2 * c], row[2 * c + 1]);
  }
  return f;
}

}  // namespace cliffbundle
