// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "core/blade_table.hpp"

namespace cliffbundle {

// Shared immutable algebra context. All multivector operations require both
// operands to carry the same context (same signature); mixing is an error.
struct AlgebraSpec {
  BladeTablePtr table;

  const Signature& signature() const { return table->signature(); }
  int n() const { return table->n(); }
  std::uint32_t dim() const { return table->blade_count(); }  // 2^n
  bool same(const AlgebraSpec& o) const {
    return table == o.table || signature() == o.signature();
  }
};

AlgebraSpec make_algebra(int p, int q);

// Sparse real multivector over the canonical blade basis. Coefficients that
// become exactly zero are pruned, so the zero multivector has an empty map.
struct Multivector {
  AlgebraSpec spec;
  std::map<std::uint32_t, double> coeffs;  // blade mask -> coefficient

  double coeff(std::uint32_t blade) const {
    auto it = coeffs.find(blade);
    return it == coeffs.end() ? 0.0 : it->second;
  }
  void set(std::uint32_t blade, double value);
  double scalar_part() const { return coeff(0); }
  double max_abs_coeff() const;
  bool is_zero() const { return coeffs.empty(); }
};

Multivector mv_zero(const AlgebraSpec& spec);
Multivector mv_one(const AlgebraSpec& spec);
Multivector mv_basis(const AlgebraSpec& spec, std::uint32_t blade);
Multivector mv_generator(const AlgebraSpec& spec, int i);  // e_i

Multivector add(const Multivector& a, const Multivector& b);
Multivector sub(const Multivector& a, const Multivector& b);
Multivector scale(const Multivector& a, double s);
Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector commutator(const Multivector& a, const Multivector& b);
Multivector anticommutator(const Multivector& a, const Multivector& b);
Multivector grade_project(const Multivector& a, int grade);

// max-abs-coefficient distance
double mv_distance(const Multivector& a, const Multivector& b);

// {"sig":[p,q],"coeffs":{"<blade mask, decimal>":value,...}}
std::string mv_to_json(const Multivector& a);
Multivector mv_from_json(const std::string& text);

}  // namespace cliffbundle
