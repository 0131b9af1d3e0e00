// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliffbundle {

// One executed check. `at_least` flips the comparison: residual-style checks
// pass when measured < tolerance, convergence orders when measured >= it.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool at_least = false;
  bool pass = false;
};

Check check_below(std::string name, double measured, double tolerance);
Check check_at_least(std::string name, double measured, double threshold);

struct Report {
  std::string suite;
  std::string rng;  // generator name, fixed by the core Rng
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  double perturb = 0.0;
  std::vector<Check> checks;

  bool pass() const;
  void sort_checks();  // by name; serialization order is part of the format
};

// shortest decimal form that parses back to the same double; locale-free
std::string format_double(double v);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace cliffbundle
