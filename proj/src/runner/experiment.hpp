// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/evolve.hpp"
#include "core/metric.hpp"

namespace cliffbundle {

// One lattice evolution run driven from JSON. The trivialization changes the
// frame states are stored and measured in, never the physics; observable
// columns agree across trivializations to rounding.
struct ExperimentConfig {
  std::string engine = "dirac1p1";  // dirac1p1 | schrodinger | kg
  int n = 64;
  double dx = 0.1;
  EvolutionConfig cfg;

  std::string initial = "gaussian";  // gaussian | planewave | rest
  double sigma = 1.0;
  double k = 0.0;
  double x0 = -1.0;                // negative: centre of the box
  std::string spinor = "chiral";   // chiral | left | up | down

  std::string trivialization = "identity";
  ChartMetric metric;              // consulted by the momentum observable
  bool has_metric = false;

  bool want_norm = true;
  bool want_p = true;
  bool want_trajectory = false;
  bool cross_check = false;        // scalar second-order oracle column
  int snapshots = 16;
};

ExperimentConfig experiment_from_json(const std::string& text);

struct ExperimentResult {
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<cx> momenta;
  std::vector<double> residuals;   // empty unless cross_check
  std::string csv;
  double final_norm = 0.0;
  cx final_p = 0.0;
};

// out_base "": no files. Otherwise writes out_base + ".csv" and, when the
// config lists a trajectory output, field snapshots out_base + "_sNNNN".
ExperimentResult run_experiment(const ExperimentConfig& c,
                                const std::string& out_base);

}  // namespace cliffbundle
