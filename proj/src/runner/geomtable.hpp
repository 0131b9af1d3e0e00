// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "core/metric.hpp"

namespace cliffbundle {

// One CSV row per point: coordinates, vierbein e_a_mu, Christoffel
// Gamma_al_mu_nu, spin connection omega_a_b_mu. Column order is fixed by the
// header so files diff cleanly across runs.
std::string geometry_table_csv(const ChartMetric& m,
                               const std::vector<RVec>& points);

// config: either a bare metric object or {"metric": {...}, "points": [[...]],
// "grid": {"shape": [...], "spacing": [...], "origin": [...]}}
std::string geometry_table_from_config(const std::string& config_json);

}  // namespace cliffbundle
