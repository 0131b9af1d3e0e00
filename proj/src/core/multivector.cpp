// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "core/multivector.hpp"

#include <cmath>

#include <json.hpp>

namespace cliffbundle {

namespace {

void require_same(const Multivector& a, const Multivector& b) {
  if (!a.spec.same(b.spec))
    throw SignatureMismatch("multivector operands belong to different algebras");
}

void require_blade(const AlgebraSpec& spec, std::uint32_t blade) {
  if (blade >= spec.dim())
    throw InvalidArgument("blade index out of range for this algebra");
}

}  // namespace

AlgebraSpec make_algebra(int p, int q) {
  return AlgebraSpec{std::make_shared<BladeTable>(Signature{p, q})};
}

void Multivector::set(std::uint32_t blade, double value) {
  require_blade(spec, blade);
  if (value == 0.0)
    coeffs.erase(blade);
  else
    coeffs[blade] = value;
}

double Multivector::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [_, v] : coeffs) m = std::max(m, std::abs(v));
  return m;
}

Multivector mv_zero(const AlgebraSpec& spec) { return Multivector{spec, {}}; }

Multivector mv_one(const AlgebraSpec& spec) {
  Multivector m{spec, {}};
  m.coeffs[0] = 1.0;
  return m;
}

Multivector mv_basis(const AlgebraSpec& spec, std::uint32_t blade) {
  require_blade(spec, blade);
  Multivector m{spec, {}};
  m.coeffs[blade] = 1.0;
  return m;
}

Multivector mv_generator(const AlgebraSpec& spec, int i) {
  if (i < 0 || i >= spec.n())
    throw InvalidArgument("generator index out of range");
  return mv_basis(spec, std::uint32_t(1) << i);
}

Multivector add(const Multivector& a, const Multivector& b) {
  require_same(a, b);
  Multivector out = a;
  for (const auto& [blade, v] : b.coeffs) {
    const double s = out.coeff(blade) + v;
    if (s == 0.0)
      out.coeffs.erase(blade);
    else
      out.coeffs[blade] = s;
  }
  return out;
}

Multivector sub(const Multivector& a, const Multivector& b) {
  return add(a, scale(b, -1.0));
}

Multivector scale(const Multivector& a, double s) {
  Multivector out{a.spec, {}};
  if (s == 0.0) return out;
  for (const auto& [blade, v] : a.coeffs) out.coeffs[blade] = s * v;
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same(a, b);
  const BladeTable& t = *a.spec.table;
  Multivector out{a.spec, {}};
  for (const auto& [ba, va] : a.coeffs) {
    for (const auto& [bb, vb] : b.coeffs) {
      const std::uint32_t blade = ba ^ bb;
      const double term = va * vb * t.sign(ba, bb);
      const double s = out.coeff(blade) + term;
      if (s == 0.0)
        out.coeffs.erase(blade);
      else
        out.coeffs[blade] = s;
    }
  }
  return out;
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return sub(geometric_product(a, b), geometric_product(b, a));
}

Multivector anticommutator(const Multivector& a, const Multivector& b) {
  return add(geometric_product(a, b), geometric_product(b, a));
}

Multivector grade_project(const Multivector& a, int grade) {
  if (grade < 0 || grade > a.spec.n())
    throw InvalidArgument("grade out of range");
  Multivector out{a.spec, {}};
  for (const auto& [blade, v] : a.coeffs)
    if (BladeTable::grade(blade) == grade) out.coeffs[blade] = v;
  return out;
}

double mv_distance(const Multivector& a, const Multivector& b) {
  require_same(a, b);
  double m = 0.0;
  for (const auto& [blade, v] : a.coeffs)
    m = std::max(m, std::abs(v - b.coeff(blade)));
  for (const auto& [blade, v] : b.coeffs)
    m = std::max(m, std::abs(a.coeff(blade) - v));
  return m;
}

std::string mv_to_json(const Multivector& a) {
  nlohmann::ordered_json j;
  j["sig"] = {a.spec.signature().p, a.spec.signature().q};
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [blade, v] : a.coeffs) c[std::to_string(blade)] = v;
  j["coeffs"] = std::move(c);
  return j.dump();
}

Multivector mv_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("multivector JSON: ") + e.what());
  }
  if (!j.contains("sig") || !j["sig"].is_array() || j["sig"].size() != 2)
    throw ParseError("multivector JSON: missing or malformed \"sig\"");
  const int p = j["sig"][0].get<int>();
  const int q = j["sig"][1].get<int>();
  AlgebraSpec spec = make_algebra(p, q);
  Multivector out = mv_zero(spec);
  if (!j.contains("coeffs") || !j["coeffs"].is_object())
    throw ParseError("multivector JSON: missing or malformed \"coeffs\"");
  for (const auto& [key, val] : j["coeffs"].items()) {
    std::uint32_t blade = 0;
    try {
      blade = static_cast<std::uint32_t>(std::stoul(key));
    } catch (const std::exception&) {
      throw ParseError("multivector JSON: blade key is not an integer");
    }
    if (blade >= spec.dim())
      throw ParseError("multivector JSON: blade key out of range");
    out.set(blade, val.get<double>());
  }
  return out;
}

}  // namespace cliffbundle
