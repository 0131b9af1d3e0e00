// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver. Talks to the library exclusively through the C API so
// the shared object stays the single supported integration surface.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliffbundle/cliffbundle.h"

namespace {

int status_exit(cb_status st) {
  switch (st) {
    case CB_OK:
      return 0;
    case CB_INVALID_ARGUMENT:
    case CB_PARSE:
      return 2;  // usage or config problem
    default:
      return 1;  // physics, stability, io
  }
}

int fail(cb_status st) {
  std::cerr << "error: " << cb_last_error() << "\n";
  return status_exit(st);
}

bool slurp(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  f << text;
  return f.good() ? 0 : 1;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stod(tok));
  return out;
}

std::vector<int> parse_shape(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, 'x'))
    out.push_back(std::stoi(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford-algebra bundle toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  double tolerance_scale = 1.0;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", seed, "deterministic RNG seed");
  app.add_option("--tolerance-scale", tolerance_scale,
                 "multiplies residual tolerances");
  app.add_option("--out", out_path, "output file or base path");
  app.add_option("--format", format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite = "all";
  double perturb = 0.0;
  verify->add_option("--suite", suite,
                     "clifford|gamma|geometry|bundle|evolution|all");
  verify->add_option("--perturb", perturb,
                     "inject a fault of this size (harness self-test)");

  auto* geometry =
      app.add_subcommand("geometry", "tabulate frame and connection data");
  geometry->fallthrough();
  std::string geo_config, metric_json, grid, grid_spacing, grid_origin;
  std::vector<std::string> point_args;
  geometry->add_option("--config", geo_config, "JSON config path");
  geometry->add_option("--metric", metric_json, "inline metric JSON");
  geometry->add_option("--point", point_args,
                       "chart point \"x0,x1,...\"; repeatable");
  geometry->add_option("--grid", grid, "grid shape \"N0xN1x...\"");
  geometry->add_option("--spacing", grid_spacing, "grid spacing \"h0,h1,...\"");
  geometry->add_option("--origin", grid_origin, "grid origin \"x0,x1,...\"");

  auto* evolve = app.add_subcommand("evolve", "run a lattice experiment");
  evolve->fallthrough();
  std::string evolve_config;
  bool cross_check = false;
  evolve->add_option("--config", evolve_config, "experiment JSON path")
      ->required();
  evolve->add_flag("--cross-check", cross_check,
                   "add the scalar second-order oracle residual column");

  auto* gamma = app.add_subcommand("gamma", "gamma representation utilities");
  auto* dump = gamma->add_subcommand("dump", "print a representation as JSON");
  dump->fallthrough();
  std::string convention = "mm";
  int dim = 4;
  dump->add_option("--convention", convention, "mm or mp");
  dump->add_option("--dim", dim, "2 or 4");
  gamma->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int pass = 0;
    const auto start = std::chrono::steady_clock::now();
    const cb_status st = cb_run_verify(suite.c_str(), seed, tolerance_scale,
                                       perturb, format.c_str(), &report,
                                       &pass);
    if (st != CB_OK) return fail(st);
    const std::chrono::duration<double> wall =
        std::chrono::steady_clock::now() - start;
    std::fprintf(stderr, "suite %s wall time %.3f s\n", suite.c_str(),
                 wall.count());
    const int rc = emit(report, out_path);
    cb_string_free(report);
    if (rc != 0) return rc;
    return pass ? 0 : 1;
  }

  if (geometry->parsed()) {
    nlohmann::json cfg = nlohmann::json::object();
    if (!geo_config.empty()) {
      std::string text;
      if (!slurp(geo_config, text)) {
        std::cerr << "error: cannot read " << geo_config << "\n";
        return 2;
      }
      try {
        cfg = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << geo_config << ": " << e.what() << "\n";
        return 2;
      }
    }
    try {
      if (!metric_json.empty())
        cfg["metric"] = nlohmann::json::parse(metric_json);
      for (const std::string& p : point_args)
        cfg["points"].push_back(parse_doubles(p));
      if (!grid.empty()) {
        cfg["grid"]["shape"] = parse_shape(grid);
        if (!grid_spacing.empty())
          cfg["grid"]["spacing"] = parse_doubles(grid_spacing);
        if (!grid_origin.empty())
          cfg["grid"]["origin"] = parse_doubles(grid_origin);
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    char* csv = nullptr;
    const cb_status st = cb_run_geometry(cfg.dump().c_str(), &csv);
    if (st != CB_OK) return fail(st);
    const int rc = emit(csv, out_path);
    cb_string_free(csv);
    return rc;
  }

  if (evolve->parsed()) {
    std::string text;
    if (!slurp(evolve_config, text)) {
      std::cerr << "error: cannot read " << evolve_config << "\n";
      return 2;
    }
    if (cross_check) {
      try {
        nlohmann::json cfg = nlohmann::json::parse(text);
        cfg["cross_check"] = true;
        text = cfg.dump();
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << evolve_config << ": " << e.what() << "\n";
        return 2;
      }
    }
    char* csv = nullptr;
    double norm = 0.0, pre = 0.0, pim = 0.0;
    const cb_status st = cb_run_evolve(
        text.c_str(), out_path.empty() ? nullptr : out_path.c_str(), &csv,
        &norm, &pre, &pim);
    if (st != CB_OK) return fail(st);
    std::string table = csv;
    cb_string_free(csv);
    char line[160];
    std::snprintf(line, sizeof line, "final_norm %.17g\nfinal_p %.17g %.17g\n",
                  norm, pre, pim);
    if (out_path.empty()) {
      std::cout << table;
      std::cerr << line;
    } else {
      std::cout << line;
    }
    return 0;
  }

  if (dump->parsed()) {
    char* json = nullptr;
    const cb_status st = cb_gamma_dump(convention.c_str(), dim, &json);
    if (st != CB_OK) return fail(st);
    const int rc = emit(std::string(json) + "\n", out_path);
    cb_string_free(json);
    return rc;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
