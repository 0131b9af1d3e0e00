// Copyright 2026 the cliffbundle authors
// SPDX-License-Identifier: Apache-2.0

#include "runner/experiment.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "core/gamma.hpp"
#include "core/kg.hpp"
#include "core/lattice.hpp"
#include "core/trivialization.hpp"
#include "runner/report.hpp"

namespace cliffbundle {

namespace {

LatticeState build_initial(const ExperimentConfig& c) {
  const double L = c.n * c.dx;
  const double x0 = c.x0 < 0 ? 0.5 * L : c.x0;
  auto profile = [&](int j) -> cx {
    const double x = j * c.dx;
    if (c.initial == "gaussian")
      return std::exp(cx(-(x - x0) * (x - x0) / (2.0 * c.sigma * c.sigma),
                         c.k * x));
    if (c.initial == "planewave") return std::exp(cx(0.0, c.k * x));
    if (c.initial == "rest") return cx(1.0, 0.0);
    throw InvalidArgument("unknown initial kind: " + c.initial);
  };

  LatticeState st;
  if (c.engine == "kg") {
    LatticeState phi = make_lattice_state(c.n, c.dx, 1);
    LatticeState phidot = phi;
    const double omega = std::hypot(c.cfg.m, c.initial == "rest" ? 0.0 : c.k);
    for (int j = 0; j < c.n; ++j) {
      const cx f = profile(j);
      phi.data(0, j) = f;
      if (c.initial == "gaussian")
        phidot.data(0, j) = 0.0;
      else
        phidot.data(0, j) = cx(0.0, -omega) * f;
    }
    st = kg_first_order(phi, phidot, c.cfg.m);
  } else if (c.engine == "schrodinger") {
    st = make_lattice_state(c.n, c.dx, 1);
    for (int j = 0; j < c.n; ++j) st.data(0, j) = profile(j);
  } else {
    Vec spinor(2);
    const double r = 1.0 / std::sqrt(2.0);
    if (c.spinor == "chiral")
      spinor << r, -r;
    else if (c.spinor == "left")
      spinor << r, r;
    else if (c.spinor == "up")
      spinor << 1, 0;
    else if (c.spinor == "down")
      spinor << 0, 1;
    else
      throw InvalidArgument("unknown spinor: " + c.spinor);
    st = make_lattice_state(c.n, c.dx, 2);
    for (int j = 0; j < c.n; ++j) st.data.col(j) = profile(j) * spinor;
  }
  st.data /= st.norm();
  return st;
}

Trajectory schrodinger_evolve(const LatticeState& psi0,
                              const EvolutionConfig& cfg) {
  if (psi0.comps != 1)
    throw InvalidArgument("schrodinger engine is single-component");
  if (!psi0.periodic) throw InvalidArgument("periodic lattice required");
  if (cfg.m <= 0.0) throw InvalidArgument("schrodinger engine needs m > 0");
  if (cfg.dt <= 0.0 || cfg.steps < 1)
    throw InvalidArgument("dt must be positive and steps >= 1");
  const int n = psi0.n;
  Mat h = Mat::Zero(n, n);
  const double kin =
      cfg.hbar * cfg.hbar / (2.0 * cfg.m * psi0.dx * psi0.dx);
  for (int j = 0; j < n; ++j) {
    h(j, j) += 2.0 * kin;
    h(j, (j + 1) % n) -= kin;
    h(j, (j + n - 1) % n) -= kin;
    if (cfg.a0.size() == n) h(j, j) += cfg.e * cfg.a0(j);
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  if (es.info() != Eigen::Success)
    throw StabilityError("hamiltonian eigendecomposition failed");
  const Vec coef = es.eigenvectors().adjoint() * psi0.flat();

  Trajectory out;
  out.times.push_back(0.0);
  out.states.push_back(psi0);
  for (int s = 1; s <= cfg.steps; ++s) {
    const double t = s * cfg.dt;
    Vec ph(n);
    for (int i = 0; i < n; ++i)
      ph(i) = std::exp(cx(0.0, -es.eigenvalues()(i) * t / cfg.hbar));
    Vec flat = es.eigenvectors() * (ph.asDiagonal() * coef);
    out.times.push_back(t);
    out.states.push_back(state_from_flat(flat, n, psi0.dx, 1));
  }
  return out;
}

Trajectory evolve_dispatch(const ExperimentConfig& c,
                           const LatticeState& psi0) {
  if (c.engine == "dirac1p1") {
    double pot = 0.0;
    if (c.cfg.a0.size() > 0) pot += c.cfg.a0.cwiseAbs().maxCoeff();
    if (c.cfg.ax.size() > 0) pot += c.cfg.ax.cwiseAbs().maxCoeff();
    const double bound =
        c.cfg.hbar / c.dx + std::abs(c.cfg.m) + std::abs(c.cfg.e) * pot;
    if (c.cfg.dt * bound >= 0.5)
      throw StabilityError("time step " + format_double(c.cfg.dt) +
                           " exceeds the stability guard; suggested dt " +
                           format_double(0.45 / bound));
    return dirac_evolve_1p1(psi0, c.cfg);
  }
  if (c.engine == "kg")
    return kg_evolve(psi0, c.cfg.m, c.cfg.dt, c.cfg.steps);
  if (c.engine == "schrodinger") return schrodinger_evolve(psi0, c.cfg);
  throw InvalidArgument("unknown engine: " + c.engine);
}

// central difference with periodic wrap, same stencil the engines use
Mat momentum_matrix(const ExperimentConfig& c, const MatrixRep* rep) {
  if (c.engine == "dirac1p1") {
    const ChartMetric m = c.has_metric ? c.metric : minkowski_metric(2);
    return momentum_operator(c.n, c.dx, *rep, m);
  }
  const int comps = c.engine == "kg" ? 2 : 1;
  Mat p = Mat::Zero(c.n * comps, c.n * comps);
  const cx w(0.0, -c.cfg.hbar / (2.0 * c.dx));
  for (int j = 0; j < c.n; ++j) {
    const int jp = (j + 1) % c.n;
    const int jm = (j + c.n - 1) % c.n;
    for (int a = 0; a < comps; ++a) {
      p(j * comps + a, jp * comps + a) += w;
      p(j * comps + a, jm * comps + a) -= w;
    }
  }
  return p;
}

struct Frame {
  int d = 1;
  std::vector<Mat> l, linv, gram, q;  // per-site blocks
  Mat pdown;
};

Frame make_frame(const ExperimentConfig& c, const Mat& p, const Mat& w) {
  Frame f;
  f.d = c.engine == "schrodinger" ? 1 : 2;
  Trivialization tr = trivialization_from_config(c.trivialization, f.d, 1);
  f.l.resize(c.n);
  f.linv.resize(c.n);
  f.gram.resize(c.n);
  f.q.resize(c.n);
  RVec x(1);
  for (int j = 0; j < c.n; ++j) {
    x(0) = j * c.dx;
    f.l[j] = triv_at(tr, x);
    f.linv[j] = triv_inv_at(tr, x);
    f.gram[j] = f.l[j].adjoint() * f.l[j];
    f.q[j] = f.l[j].adjoint() * w * f.l[j];
  }
  if (p.rows() > 0) {
    f.pdown = Mat(p.rows(), p.cols());
    for (int j = 0; j < c.n; ++j)
      for (int k = 0; k < c.n; ++k)
        f.pdown.block(j * f.d, k * f.d, f.d, f.d) =
            f.linv[j] * p.block(j * f.d, k * f.d, f.d, f.d) * f.l[k];
  }
  return f;
}

}  // namespace

ExperimentConfig experiment_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  ExperimentConfig c;
  try {
    static const std::set<std::string> known = {
        "engine",  "lattice", "cfg",         "initial",  "trivialization",
        "metric",  "outputs", "cross_check", "snapshots"};
    for (const auto& item : j.items())
      if (!known.count(item.key()))
        throw ParseError("experiment config: unknown key \"" + item.key() +
                         "\"");
    c.engine = j.value("engine", std::string("dirac1p1"));
    if (c.engine != "dirac1p1" && c.engine != "schrodinger" &&
        c.engine != "kg")
      throw ParseError("experiment config: unknown engine \"" + c.engine +
                       "\"");
    if (!j.contains("lattice"))
      throw ParseError("experiment config: missing \"lattice\"");
    c.n = j["lattice"].value("n", 64);
    c.dx = j["lattice"].value("dx", 0.1);
    const nlohmann::json cj =
        j.contains("cfg") ? j["cfg"] : nlohmann::json::object();
    c.cfg.dt = cj.value("dt", 0.01);
    c.cfg.steps = cj.value("steps", 1);
    c.cfg.m = cj.value("m", 0.0);
    c.cfg.e = cj.value("e", 0.0);
    c.cfg.hbar = cj.value("hbar", 1.0);
    if (j.contains("initial")) {
      const auto& ij = j["initial"];
      c.initial = ij.value("kind", std::string("gaussian"));
      c.sigma = ij.value("sigma", 1.0);
      c.k = ij.value("k", 0.0);
      c.x0 = ij.value("x0", -1.0);
      c.spinor = ij.value("spinor", std::string("chiral"));
    }
    if (j.contains("trivialization")) {
      const auto& tj = j["trivialization"];
      if (tj.is_string()) {
        c.trivialization = tj.get<std::string>();
      } else {
        const std::string kind = tj.value("kind", std::string("identity"));
        if (kind == "identity") {
          c.trivialization = "identity";
        } else if (kind == "scalar") {
          c.trivialization = "scalar:" + format_double(tj.value("c", 1.0));
        } else if (kind == "random_smooth") {
          c.trivialization =
              "random_smooth:" +
              std::to_string(tj.value("seed", std::uint64_t(1))) + "," +
              format_double(tj.value("amplitude", 0.2));
        } else {
          throw ParseError("experiment config: unknown trivialization \"" +
                           kind + "\"");
        }
      }
    }
    if (j.contains("metric")) {
      c.metric = metric_from_json(j["metric"].dump());
      c.has_metric = true;
    }
    if (j.contains("outputs")) {
      c.want_norm = c.want_p = c.want_trajectory = false;
      for (const auto& out : j["outputs"]) {
        const std::string s = out.get<std::string>();
        if (s == "norm")
          c.want_norm = true;
        else if (s == "expectation_p")
          c.want_p = true;
        else if (s == "trajectory")
          c.want_trajectory = true;
        else
          throw ParseError("experiment config: unknown output \"" + s + "\"");
      }
    }
    c.cross_check = j.value("cross_check", false);
    c.snapshots = j.value("snapshots", 16);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  if (c.n < 3) throw ParseError("experiment config: lattice.n must be >= 3");
  if (c.dx <= 0.0)
    throw ParseError("experiment config: lattice.dx must be positive");
  if (c.snapshots < 1)
    throw ParseError("experiment config: snapshots must be >= 1");
  return c;
}

ExperimentResult run_experiment(const ExperimentConfig& c,
                                const std::string& out_base) {
  const MatrixRep rep = dirac_gammas_1p1(Convention::MostlyMinus);
  LatticeState psi0 = build_initial(c);
  Trajectory tr = evolve_dispatch(c, psi0);

  Mat w;  // pairing weight on the fibre
  if (c.engine == "dirac1p1") {
    w = rep.metric_diag(0) * rep.gamma[0];
  } else if (c.engine == "kg") {
    w = Mat::Zero(2, 2);
    w(0, 0) = 1.0;
    w(1, 1) = -1.0;
  } else {
    w = Mat::Identity(1, 1);
  }
  const Mat p = momentum_matrix(c, &rep);  // final <p> is always reported
  Frame fr = make_frame(c, p, w);

  ExperimentResult res;
  res.times = tr.times;
  const std::size_t rows = tr.states.size();

  auto frame_norm = [&](const LatticeState& s) {
    double n2 = 0.0;
    for (int j = 0; j < c.n; ++j) {
      const Vec lj = fr.linv[j] * s.data.col(j);
      n2 += lj.dot(fr.gram[j] * lj).real();
    }
    return std::sqrt(n2 * c.dx);
  };
  // unnormalized pairing functional; the conserved quantity for free runs
  auto frame_p = [&](const LatticeState& s) {
    Vec lam(c.n * fr.d);
    for (int j = 0; j < c.n; ++j)
      lam.segment(j * fr.d, fr.d) = fr.linv[j] * s.data.col(j);
    const Vec plam = fr.pdown * lam;
    cx num = 0.0;
    for (int j = 0; j < c.n; ++j)
      num += lam.segment(j * fr.d, fr.d)
                 .dot(fr.q[j] * plam.segment(j * fr.d, fr.d));
    return num * c.dx;
  };

  for (std::size_t i = 0; i < rows; ++i) {
    if (c.want_norm) res.norms.push_back(frame_norm(tr.states[i]));
    if (c.want_p) res.momenta.push_back(frame_p(tr.states[i]));
  }

  if (c.cross_check) {
    if (c.engine != "dirac1p1" || c.cfg.m <= 0.0 || c.cfg.e != 0.0 ||
        c.cfg.a0.size() > 0 || c.cfg.ax.size() > 0 || c.cfg.hbar != 1.0)
      throw InvalidArgument(
          "cross-check needs the free massive dirac1p1 engine at hbar 1");
    // componentwise the free evolution solves the second-order equation;
    // compare against the independent two-component scalar engine
    LatticeState phi = make_lattice_state(c.n, c.dx, 1);
    LatticeState phidot = phi;
    phi.data.row(0) = tr.states.front().data.row(0);
    Mat h = dirac_hamiltonian_1p1(c.n, c.dx, c.cfg);
    const Vec hpsi = h * tr.states.front().flat();
    for (int j = 0; j < c.n; ++j)
      phidot.data(0, j) = cx(0.0, -1.0) * hpsi(j * 2);
    Trajectory kg = kg_evolve(kg_first_order(phi, phidot, c.cfg.m), c.cfg.m,
                              c.cfg.dt, c.cfg.steps);
    for (std::size_t i = 0; i < rows; ++i) {
      auto [phi_t, phidot_t] = kg_second_order(kg.states[i], c.cfg.m);
      res.residuals.push_back(
          (phi_t.data.row(0) - tr.states[i].data.row(0))
              .cwiseAbs()
              .maxCoeff());
    }
  }

  std::ostringstream o;
  o << "t";
  if (c.want_norm) o << ",norm";
  if (c.want_p) o << ",re_p,im_p";
  if (c.cross_check) o << ",residual";
  o << "\n";
  for (std::size_t i = 0; i < rows; ++i) {
    o << format_double(res.times[i]);
    if (c.want_norm) o << "," << format_double(res.norms[i]);
    if (c.want_p)
      o << "," << format_double(res.momenta[i].real()) << ","
        << format_double(res.momenta[i].imag());
    if (c.cross_check) o << "," << format_double(res.residuals[i]);
    o << "\n";
  }
  res.csv = o.str();
  res.final_norm =
      c.want_norm ? res.norms.back() : frame_norm(tr.states.back());
  res.final_p = c.want_p ? res.momenta.back() : frame_p(tr.states.back());

  if (!out_base.empty()) {
    std::ofstream f(out_base + ".csv");
    if (!f) throw IoError("cannot write " + out_base + ".csv");
    f << res.csv;
    if (!f.good()) throw IoError("short write on " + out_base + ".csv");
    if (c.want_trajectory) {
      const int stride =
          std::max(1, int(rows - 1) / std::max(1, c.snapshots));
      std::size_t written = 0;
      for (std::size_t i = 0; i < rows; i += stride, ++written) {
        RVec sp(1), org(1);
        sp << c.dx;
        org << 0.0;
        Field fld = make_field(make_grid({c.n}, sp, org),
                               tr.states[i].comps);
        fld.data = tr.states[i].data;
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_s%04zu", written);
        save_field(fld, out_base + suffix);
      }
    }
  }
  return res;
}

}  // namespace cliffbundle
