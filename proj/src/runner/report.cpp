// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "runner/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cliffbundle {

Check check_below(std::string name, double measured, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.at_least = false;
  c.pass = std::isfinite(measured) && measured < tolerance;
  return c;
}

Check check_at_least(std::string name, double measured, double threshold) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = threshold;
  c.at_least = true;
  c.pass = std::isfinite(measured) && measured >= threshold;
  return c;
}

bool Report::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::sort_checks() {
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const Report& r) {
  std::ostringstream o;
  o << "{\n";
  o << "  \"suite\": " << quote(r.suite) << ",\n";
  o << "  \"rng\": " << quote(r.rng) << ",\n";
  o << "  \"seed\": " << r.seed << ",\n";
  o << "  \"tolerance_scale\": " << format_double(r.tolerance_scale) << ",\n";
  o << "  \"perturb\": " << format_double(r.perturb) << ",\n";
  o << "  \"pass\": " << (r.pass() ? "true" : "false") << ",\n";
  o << "  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const Check& c = r.checks[i];
    o << (i ? ",\n" : "\n");
    o << "    {\"name\": " << quote(c.name)
      << ", \"measured\": " << format_double(c.measured)
      << ", \"tolerance\": " << format_double(c.tolerance) << ", \"cmp\": \""
      << (c.at_least ? "ge" : "lt") << "\", \"pass\": "
      << (c.pass ? "true" : "false") << "}";
  }
  o << "\n  ]\n}\n";
  return o.str();
}

std::string report_to_csv(const Report& r) {
  std::ostringstream o;
  o << "# suite=" << r.suite << " rng=" << r.rng << " seed=" << r.seed
    << " tolerance_scale=" << format_double(r.tolerance_scale)
    << " perturb=" << format_double(r.perturb)
    << " pass=" << (r.pass() ? 1 : 0) << "\n";
  o << "name,measured,tolerance,cmp,pass\n";
  for (const Check& c : r.checks)
    o << c.name << "," << format_double(c.measured) << ","
      << format_double(c.tolerance) << "," << (c.at_least ? "ge" : "lt")
      << "," << (c.pass ? 1 : 0) << "\n";
  return o.str();
}

}  // namespace cliffbundle
