// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "cliffbundle/cliffbundle.h"

#include <Eigen/Core>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "core/gamma.hpp"
#include "core/multivector.hpp"
#include "runner/experiment.hpp"
#include "runner/geomtable.hpp"
#include "runner/verify.hpp"

using namespace cliffbundle;

struct cb_algebra {
  AlgebraSpec spec;
};
struct cb_mv {
  Multivector mv;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void thread_cap() {
  // CLIFFBUNDLE_THREADS caps the linear algebra backend; parsed once
  static const int cap = [] {
    const char* env = std::getenv("CLIFFBUNDLE_THREADS");
    if (!env) return 0;
    const int v = std::atoi(env);
    return v > 0 ? v : 1;
  }();
  if (cap > 0) Eigen::setNbThreads(cap);
}

template <typename F>
cb_status guarded(F&& f) {
  try {
    f();
    return CB_OK;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return CB_INVALID_ARGUMENT;
  } catch (const CapacityError& e) {
    g_last_error = e.what();
    return CB_CAPACITY;
  } catch (const SignatureMismatch& e) {
    g_last_error = e.what();
    return CB_SIGNATURE_MISMATCH;
  } catch (const DimensionMismatch& e) {
    g_last_error = e.what();
    return CB_DIMENSION_MISMATCH;
  } catch (const SingularOperator& e) {
    g_last_error = e.what();
    return CB_SINGULAR;
  } catch (const StabilityError& e) {
    g_last_error = e.what();
    return CB_STABILITY;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return CB_PARSE;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return CB_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CB_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return CB_INTERNAL;
  }
}

cb_status require(bool ok, const char* what) {
  if (ok) return CB_OK;
  g_last_error = what;
  return CB_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* cb_version(void) { return "cliffbundle 0.1.0"; }

const char* cb_last_error(void) { return g_last_error.c_str(); }

void cb_string_free(char* s) { std::free(s); }

cb_status cb_algebra_create(int p, int q, cb_algebra** out) {
  if (cb_status st = require(out != nullptr, "out is null")) return st;
  return guarded([&] { *out = new cb_algebra{make_algebra(p, q)}; });
}

void cb_algebra_destroy(cb_algebra* a) { delete a; }

cb_status cb_mv_basis(const cb_algebra* a, uint32_t blade, cb_mv** out) {
  if (cb_status st = require(a && out, "algebra or out is null")) return st;
  return guarded([&] { *out = new cb_mv{mv_basis(a->spec, blade)}; });
}

cb_status cb_mv_from_json(const char* json, cb_mv** out) {
  if (cb_status st = require(json && out, "json or out is null")) return st;
  return guarded([&] { *out = new cb_mv{mv_from_json(json)}; });
}

void cb_mv_destroy(cb_mv* m) { delete m; }

cb_status cb_mv_product(const cb_mv* x, const cb_mv* y, cb_mv** out) {
  if (cb_status st = require(x && y && out, "operand or out is null"))
    return st;
  return guarded(
      [&] { *out = new cb_mv{geometric_product(x->mv, y->mv)}; });
}

cb_status cb_mv_grade_project(const cb_mv* x, int grade, cb_mv** out) {
  if (cb_status st = require(x && out, "operand or out is null")) return st;
  return guarded([&] { *out = new cb_mv{grade_project(x->mv, grade)}; });
}

cb_status cb_mv_to_json(const cb_mv* x, char** out) {
  if (cb_status st = require(x && out, "operand or out is null")) return st;
  return guarded([&] { *out = dup_string(mv_to_json(x->mv)); });
}

cb_status cb_gamma_dump(const char* convention, int dim, char** json) {
  if (cb_status st = require(convention && json, "convention or json is null"))
    return st;
  return guarded([&] {
    const Convention conv = parse_convention(convention);
    MatrixRep rep;
    if (dim == 4)
      rep = dirac_gammas(conv);
    else if (dim == 2)
      rep = dirac_gammas_1p1(conv);
    else
      throw InvalidArgument("gamma dump supports dim 2 or 4");
    *json = dup_string(rep_to_json(rep));
  });
}

cb_status cb_run_verify(const char* suite, uint64_t seed,
                        double tolerance_scale, double perturb,
                        const char* format, char** report, int* pass) {
  if (cb_status st =
          require(suite && format && report && pass, "null argument"))
    return st;
  return guarded([&] {
    thread_cap();
    VerifyOptions opt;
    opt.seed = seed;
    opt.tolerance_scale = tolerance_scale;
    opt.perturb = perturb;
    if (opt.tolerance_scale <= 0.0)
      throw InvalidArgument("tolerance scale must be positive");
    Report r = run_verify_suite(suite, opt);
    std::string text;
    if (std::string(format) == "json")
      text = report_to_json(r);
    else if (std::string(format) == "csv")
      text = report_to_csv(r);
    else
      throw InvalidArgument("format must be json or csv");
    *report = dup_string(text);
    *pass = r.pass() ? 1 : 0;
  });
}

cb_status cb_run_geometry(const char* config_json, char** csv) {
  if (cb_status st = require(config_json && csv, "null argument")) return st;
  return guarded([&] {
    thread_cap();
    *csv = dup_string(geometry_table_from_config(config_json));
  });
}

cb_status cb_run_evolve(const char* config_json, const char* out_base,
                        char** csv, double* final_norm, double* final_p_re,
                        double* final_p_im) {
  if (cb_status st = require(config_json && csv && final_norm && final_p_re &&
                                 final_p_im,
                             "null argument"))
    return st;
  return guarded([&] {
    thread_cap();
    ExperimentConfig cfg = experiment_from_json(config_json);
    ExperimentResult res =
        run_experiment(cfg, out_base ? std::string(out_base) : std::string());
    *csv = dup_string(res.csv);
    *final_norm = res.final_norm;
    *final_p_re = res.final_p.real();
    *final_p_im = res.final_p.imag();
  });
}

}  // extern "C"
