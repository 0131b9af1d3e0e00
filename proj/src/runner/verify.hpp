// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "runner/report.hpp"

namespace cliffbundle {

struct VerifyOptions {
  std::uint64_t seed = 1;
  double tolerance_scale = 1.0;  // multiplies residual tolerances, not order thresholds
  double perturb = 0.0;          // fault injection; nonzero must trip >= 1 check
};

// suite in {clifford, gamma, geometry, bundle, evolution, all}; unknown names
// throw InvalidArgument. Deterministic per (suite, options): each suite seeds
// its own generator, so a suite inside "all" reproduces its standalone run.
Report run_verify_suite(const std::string& suite, const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();

}  // namespace cliffbundle
