// Copyright 2026 The vqsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsm/experiments/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vqsm/circuit/hea.hpp"
#include "vqsm/oracles/reflection.hpp"
#include "vqsm/oracles/tridiagonal.hpp"

namespace vqsm::experiments {

namespace {

// Rows are independent; each writes only its own slot so the table does not
// depend on scheduling.
template <class F>
void for_rows(int n, F&& f) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

engine::ConvergenceReport checked_run(const engine::RunConfig& cfg, const engine::RunContext& ctx) {
  auto rep = engine::run(cfg, ctx);
  if (rep.status == engine::RunStatus::Failed) throw Error("run failed: " + rep.message);
  return rep;
}

// Record of iteration n, or the last record when the run stopped earlier.
const engine::IterationRecord& at_iteration(const engine::ConvergenceReport& rep, int n) {
  if (rep.records.empty()) throw Error("run produced no iterations");
  for (const auto& r : rep.records)
    if (r.n == n) return r;
  return rep.records.back();
}

// Energy after n iterations; the reference energy when n is 0.
double energy_at(const engine::ConvergenceReport& rep, int n) {
  if (n == 0) return rep.e_reference;
  return at_iteration(rep, n).e0;
}

const CMatrix& dense_block(const engine::RunContext& ctx) {
  if (ctx.h_dense.size() == 0) throw CapacityError("sector too large for a dense comparison");
  return ctx.h_dense;
}

// Optimal first-iteration cost over the sector.
double first_cost_min(const engine::RunContext& ctx, engine::CostKind cost) {
  const CMatrix& h = dense_block(ctx);
  const CVector guess = ctx.restrict(circuit::determinant_state(ctx.problem->guess).amplitudes());
  const auto io = oracles::exact_interaction_optimum(h, guess, {guess});
  if (cost != engine::CostKind::Gain) return io.c_min;
  oracles::ReflectionConfig rc;
  rc.start = io.vector;
  return oracles::minimize_reflection(oracles::ReflectionCost::Gain, h, guess, {guess}, rc)
      .c_star;
}

std::string col(const std::string& prefix, int n) { return prefix + std::to_string(n); }

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Dissociation: return "dissociation";
    case Kind::LayerScan: return "layer-scan";
    case Kind::IterationScan: return "iteration-scan";
    case Kind::Stochastic: return "stochastic";
    case Kind::ChargeGap: return "charge-gap";
    case Kind::StGap: return "st-gap";
    case Kind::Resources: return "resources";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  for (Kind k : {Kind::Dissociation, Kind::LayerScan, Kind::IterationScan, Kind::Stochastic,
                 Kind::ChargeGap, Kind::StGap, Kind::Resources}) {
    if (to_string(k) == s) return k;
  }
  throw SpecError("unknown experiment kind '" + s + "'");
}

std::vector<double> GeometryTemplate::distances() const {
  std::vector<double> out;
  const double slack = d_step * 1e-3;
  for (int i = 0;; ++i) {
    const double d = d_min + i * d_step;
    if (d > d_max + slack) break;
    out.push_back(d);
  }
  return out;
}

chem::Geometry GeometryTemplate::at(double d) const {
  const int ne = n_atoms - charge;
  return at(d, charge, ms2 < 0 ? ne % 2 : ms2);
}

chem::Geometry GeometryTemplate::at(double d, int q, int m) const {
  if (shape == "chain") return chem::linear_chain(n_atoms, d, q, m);
  if (shape == "ring") return chem::regular_ring(n_atoms, d, q, m);
  throw SpecError("geometry must be chain or ring");
}

void ExperimentSpec::validate() const {
  if (geometry.shape != "chain" && geometry.shape != "ring") {
    throw SpecError("geometry must be chain or ring");
  }
  if (geometry.n_atoms < 1) throw SpecError("atoms must be positive");
  if (geometry.shape == "ring" && geometry.n_atoms < 3) throw SpecError("a ring needs at least 3 atoms");
  if (!(geometry.d_min > 0.0) || !(geometry.d_max >= geometry.d_min)) {
    throw SpecError("distance range must be positive and ordered");
  }
  if (!(geometry.d_step > 0.0)) throw SpecError("d-step must be positive");
  if (iterations < 1) throw SpecError("iterations must be at least 1");
  if (restarts < 1) throw SpecError("restarts must be at least 1");
  if (layers.empty()) throw SpecError("at least one layer count is required");
  for (int l : layers)
    if (l < 0) throw SpecError("layer counts must be nonnegative");
  for (int q : qubits)
    if (q < 1) throw SpecError("qubit counts must be positive");
  if (!(eps_w > 0.0) || !(eps_e > 0.0)) throw SpecError("eps-w and eps-e must be positive");
  try {
    run_config(seed).validate();
  } catch (const Error& e) {
    throw SpecError(e.what());
  }
}

engine::RunConfig ExperimentSpec::run_config(std::uint64_t s) const {
  engine::RunConfig cfg;
  cfg.algorithm = algorithm;
  cfg.cost = cost;
  cfg.trial = trial;
  cfg.eps_w = eps_w;
  cfg.eps_e = eps_e;
  cfg.max_iterations = iterations;
  cfg.optimizer.restarts = restarts;
  cfg.optimizer.seed = s;
  return cfg;
}

nlohmann::json ExperimentSpec::to_json() const {
  return {{"kind", to_string(kind)},
          {"geometry",
           {{"shape", geometry.shape},
            {"n_atoms", geometry.n_atoms},
            {"d_min", geometry.d_min},
            {"d_max", geometry.d_max},
            {"d_step", geometry.d_step},
            {"charge", geometry.charge},
            {"ms2", geometry.ms2}}},
          {"algorithm", engine::to_string(algorithm)},
          {"cost", engine::to_string(cost)},
          {"trial", engine::to_string(trial)},
          {"layers", layers},
          {"qubits", qubits},
          {"iterations", iterations},
          {"restarts", restarts},
          {"seed", seed},
          {"eps_w", eps_w},
          {"eps_e", eps_e},
          {"out", out}};
}

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
  ExperimentSpec s;
  try {
    s.kind = kind_from_string(j.at("kind").get<std::string>());
    const auto& g = j.at("geometry");
    s.geometry.shape = g.value("shape", s.geometry.shape);
    s.geometry.n_atoms = g.value("n_atoms", s.geometry.n_atoms);
    s.geometry.d_min = g.value("d_min", s.geometry.d_min);
    s.geometry.d_max = g.value("d_max", s.geometry.d_max);
    s.geometry.d_step = g.value("d_step", s.geometry.d_step);
    s.geometry.charge = g.value("charge", s.geometry.charge);
    s.geometry.ms2 = g.value("ms2", s.geometry.ms2);
    s.algorithm = engine::algorithm_from_string(j.value("algorithm", std::string("vqsm")));
    s.cost = engine::cost_from_string(j.value("cost", std::string("interaction")));
    s.trial = engine::trial_from_string(j.value("trial", std::string("hea:1")));
    s.layers = j.value("layers", s.layers);
    s.qubits = j.value("qubits", s.qubits);
    s.iterations = j.value("iterations", s.iterations);
    s.restarts = j.value("restarts", s.restarts);
    s.seed = j.value("seed", s.seed);
    s.eps_w = j.value("eps_w", s.eps_w);
    s.eps_e = j.value("eps_e", s.eps_e);
    s.out = j.value("out", s.out);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("bad spec: ") + e.what());
  } catch (const DomainError& e) {
    throw SpecError(e.what());
  }
  return s;
}

std::uint64_t row_seed(std::uint64_t base, int row) { return opt::restart_seed(base ^ 0x5851f42d4c957f2dULL, row); }

std::string Table::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  char buf[64];
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", r[i]);
      os << (i ? "," : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

Table cmd_dissociation(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = spec.geometry.distances();
  Table t;
  t.columns = {"d", "E_HF", "E_FCI"};
  for (int n = 0; n <= spec.iterations; ++n) t.columns.push_back(col("E_n", n));
  t.columns.push_back("fidelity");
  t.rows.resize(ds.size());
  for_rows(static_cast<int>(ds.size()), [&](int i) {
    const auto p = engine::build_problem(spec.geometry.at(ds[i]));
    const auto cfg = spec.run_config(row_seed(spec.seed, i));
    const auto ctx = engine::RunContext::make(p, cfg);
    const auto rep = checked_run(cfg, ctx);
    auto& row = t.rows[i];
    row = {ds[i], p.e_guess, *rep.e_fci};
    for (int n = 0; n <= spec.iterations; ++n) row.push_back(energy_at(rep, n));
    row.push_back(rep.records.back().fidelity);
  });
  return t;
}

Table cmd_layer_scan(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = spec.geometry.distances();
  const int nl = static_cast<int>(spec.layers.size());
  Table t;
  t.columns = {"d", "layers", "dE", "omega2", "cost", "c_min", "gap_to_cmin", "evals"};
  t.rows.resize(ds.size() * spec.layers.size());
  for_rows(static_cast<int>(t.rows.size()), [&](int row) {
    const int i = row / nl, l = spec.layers[static_cast<std::size_t>(row % nl)];
    const auto p = engine::build_problem(spec.geometry.at(ds[i]));
    auto cfg = spec.run_config(row_seed(spec.seed, row));
    cfg.trial = engine::TrialSource::hea(l);
    cfg.max_iterations = 1;
    const auto ctx = engine::RunContext::make(p, cfg);
    const auto rep = checked_run(cfg, ctx);
    const auto& r = rep.records.front();
    const double c_min = first_cost_min(ctx, spec.cost);
    t.rows[row] = {ds[i], double(l), r.error, r.omega * r.omega, r.cost, c_min, r.cost - c_min, double(r.evals)};
  });
  return t;
}

Table cmd_iteration_scan(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = spec.geometry.distances();
  const int nn = spec.iterations;
  Table t;
  t.columns = {"d", "n", "dE", "fidelity", "dE_renorm", "dE_lanczos", "dE_exact_interaction",
               "dE_exact_tridiag", "rate"};
  t.rows.resize(ds.size() * static_cast<std::size_t>(nn));
  for_rows(static_cast<int>(ds.size()), [&](int i) {
    const auto p = engine::build_problem(spec.geometry.at(ds[i]));
    const auto cfg = spec.run_config(row_seed(spec.seed, i));
    const auto ctx = engine::RunContext::make(p, cfg);
    const auto rep = checked_run(cfg, ctx);
    const double e_fci = *rep.e_fci;

    auto exact_cfg = cfg;
    exact_cfg.algorithm = engine::Algorithm::VQSM;
    exact_cfg.trial = engine::TrialSource::exact();
    exact_cfg.eps_w = 1e-14;
    exact_cfg.eps_e = 1e-12;
    exact_cfg.cost = engine::CostKind::Interaction;
    const auto rep_i = checked_run(exact_cfg, engine::RunContext::make(p, exact_cfg));
    exact_cfg.cost = engine::CostKind::TriDiag;
    const auto rep_t = checked_run(exact_cfg, engine::RunContext::make(p, exact_cfg));

    const CVector v0 = ctx.restrict(circuit::determinant_state(p.guess).amplitudes());
    const auto tri = oracles::lanczos(dense_block(ctx), v0, static_cast<std::size_t>(nn) + 1);
    const double first = at_iteration(rep, 1).error;
    const double rate = rep.rate.value_or(std::nan(""));
    for (int n = 1; n <= nn; ++n) {
      const auto& r = at_iteration(rep, n);
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n) + 1, tri.size());
      t.rows[static_cast<std::size_t>(i * nn + n - 1)] = {
          ds[i], double(n), r.error, r.fidelity, first > 0.0 ? r.error / first : std::nan(""),
          tri.ground_energy(k) - e_fci, energy_at(rep_i, n) - e_fci, energy_at(rep_t, n) - e_fci, rate};
    }
  });
  return t;
}

Table cmd_stochastic(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = spec.geometry.distances();
  const int nl = static_cast<int>(spec.layers.size());
  Table t;
  t.columns = {"d", "layers", "restarts", "c_min", "best_gap", "q10", "q25", "q50", "q75"};
  t.rows.resize(ds.size() * spec.layers.size());
  for_rows(static_cast<int>(t.rows.size()), [&](int row) {
    const int i = row / nl, l = spec.layers[static_cast<std::size_t>(row % nl)];
    const auto p = engine::build_problem(spec.geometry.at(ds[i]));
    auto cfg = spec.run_config(row_seed(spec.seed, row));
    cfg.trial = engine::TrialSource::hea(l);
    cfg.max_iterations = 1;
    const auto ctx = engine::RunContext::make(p, cfg, false);
    const auto rep = checked_run(cfg, ctx);
    auto study = *rep.records.front().study;
    const double c_min = first_cost_min(ctx, spec.cost);
    study.summarize(c_min);
    double best = study.samples.front();
    for (double s : study.samples) best = std::min(best, s);
    t.rows[row] = {ds[i], double(l), double(study.samples.size()), c_min, best - c_min,
                   study.q10, study.q25, study.q50, study.q75};
  });
  return t;
}

namespace {

struct SpeciesRun {
  engine::ConvergenceReport rep;
  double e_hf = 0.0;
  double e_fci = 0.0;
};

SpeciesRun run_species(const ExperimentSpec& spec, const chem::Geometry& g, std::uint64_t seed,
                       std::optional<double> s_squared) {
  const auto p = engine::build_problem(g);
  const auto cfg = spec.run_config(seed);
  auto ctx = engine::RunContext::make(p, cfg, false);
  oracles::FciOptions fo;
  fo.s_squared = s_squared;
  ctx.fci = engine::solve_fci(p, fo);
  SpeciesRun out;
  out.rep = checked_run(cfg, ctx);
  out.e_hf = p.e_guess;
  out.e_fci = ctx.fci->e0;
  return out;
}

}  // namespace

Table cmd_charge_gap(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = spec.geometry.distances();
  const int nn = spec.iterations, na = spec.geometry.n_atoms;
  Table t;
  t.columns = {"d", "n", "gap", "gap_fci", "gap_hf", "E_cation", "E_anion", "E_neutral"};
  t.rows.resize(ds.size() * static_cast<std::size_t>(nn));
  // Doublet ions are run at 2 S_z = +1.
  const int ion_ms2 = (na + 1) % 2 == 0 ? 0 : 1;
  for_rows(static_cast<int>(ds.size()), [&](int i) {
    const auto seed = row_seed(spec.seed, i);
    const auto cat = run_species(spec, spec.geometry.at(ds[i], +1, ion_ms2), row_seed(seed, 0), std::nullopt);
    const auto an = run_species(spec, spec.geometry.at(ds[i], -1, ion_ms2), row_seed(seed, 1), std::nullopt);
    const auto neu = run_species(spec, spec.geometry.at(ds[i], 0, na % 2), row_seed(seed, 2), std::nullopt);
    const double fci = cat.e_fci + an.e_fci - 2.0 * neu.e_fci;
    const double hf = cat.e_hf + an.e_hf - 2.0 * neu.e_hf;
    for (int n = 1; n <= nn; ++n) {
      const double ec = energy_at(cat.rep, n), ea = energy_at(an.rep, n), e0 = energy_at(neu.rep, n);
      t.rows[static_cast<std::size_t>(i * nn + n - 1)] = {ds[i], double(n), ec + ea - 2.0 * e0, fci, hf, ec, ea, e0};
    }
  });
  return t;
}

Table cmd_st_gap(const ExperimentSpec& spec) {
  spec.validate();
  if (spec.geometry.n_atoms % 2 != 0 || spec.geometry.charge != 0) {
    throw SpecError("st-gap needs a neutral molecule with an even atom count");
  }
  const auto ds = spec.geometry.distances();
  const int nn = spec.iterations;
  Table t;
  t.columns = {"d", "n", "gap", "gap_fci", "gap_hf", "E_singlet", "E_triplet"};
  t.rows.resize(ds.size() * static_cast<std::size_t>(nn));
  for_rows(static_cast<int>(ds.size()), [&](int i) {
    const auto seed = row_seed(spec.seed, i);
    const auto s = run_species(spec, spec.geometry.at(ds[i], 0, 0), row_seed(seed, 0), 0.0);
    const auto tr = run_species(spec, spec.geometry.at(ds[i], 0, 2), row_seed(seed, 1), 2.0);
    for (int n = 1; n <= nn; ++n) {
      const double es = energy_at(s.rep, n), et = energy_at(tr.rep, n);
      t.rows[static_cast<std::size_t>(i * nn + n - 1)] = {
          ds[i], double(n), et - es, tr.e_fci - s.e_fci, tr.e_hf - s.e_hf, es, et};
    }
  });
  return t;
}

nlohmann::json cmd_resources(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<int> qubits = spec.qubits;
  if (qubits.empty()) qubits.push_back(2 * spec.geometry.n_atoms);
  const circuit::ResourceModel model;
  nlohmann::json grid = nlohmann::json::array();
  for (int q : qubits)
    for (int l : spec.layers) {
      const auto r = circuit::estimate_resources(q, l, spec.trial.entangler, model);
      grid.push_back({{"n_qubits", q},
                      {"layers", l},
                      {"params", r.params},
                      {"cnot_native", r.cnot_native},
                      {"cnot_hadamard_test", r.cnot_hadamard_test}});
    }
  return {{"entangler", circuit::to_string(spec.trial.entangler)},
          {"assumptions",
           {{"cnots_per_controlled_ry", model.cnots_per_controlled_ry},
            {"cnots_per_toffoli", model.cnots_per_toffoli},
            {"controlled_circuits", model.controlled_circuits}}},
          {"grid", grid}};
}

Table run_table(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case Kind::Dissociation: return cmd_dissociation(spec);
    case Kind::LayerScan: return cmd_layer_scan(spec);
    case Kind::IterationScan: return cmd_iteration_scan(spec);
    case Kind::Stochastic: return cmd_stochastic(spec);
    case Kind::ChargeGap: return cmd_charge_gap(spec);
    case Kind::StGap: return cmd_st_gap(spec);
    case Kind::Resources: break;
  }
  throw SpecError("resources produces JSON, not a table");
}

std::string gnuplot_template(const Table& t, const std::string& csv_path) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel '" << (t.columns.empty() ? "" : t.columns.front()) << "'\n"
     << "plot";
  for (std::size_t c = 2; c <= t.columns.size(); ++c) {
    os << (c > 2 ? ", \\\n    " : " ") << "'" << csv_path << "' using 1:" << c << " with linespoints";
  }
  os << '\n';
  return os.str();
}

void write_outputs(const ExperimentSpec& spec, const Table& t) {
  if (spec.out.empty()) {
    std::cout << t.to_csv();
    return;
  }
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SpecError("cannot write " + path);
    f << text;
  };
  write(spec.out, t.to_csv());
  nlohmann::json side = {{"spec", spec.to_json()}, {"seed", spec.seed}, {"columns", t.columns},
                         {"rows", t.rows.size()}};
  write(spec.out + ".json", side.dump(2) + "\n");
  write(spec.out + ".gp", gnuplot_template(t, spec.out));
}

}  // namespace vqsm::experiments
