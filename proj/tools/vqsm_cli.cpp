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

// Command-line front end for the batch experiments.
//
// Exit codes: 0 success, 2 invalid specification, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vqsm/chem/fcidump.hpp"
#include "vqsm/experiments/experiments.hpp"

namespace ex = vqsm::experiments;

namespace {

constexpr int kSpecError = 2;
constexpr int kNumericalError = 3;

struct Flags {
  std::string geometry = "chain";
  int atoms = 4;
  double d_min = 1.0, d_max = 1.0, d_step = 0.1;
  int charge = 0;
  int ms2 = -1;
  std::string algorithm = "vqsm";
  std::string cost = "interaction";
  std::string trial = "hea:1";
  std::vector<int> layers{1};
  std::vector<int> qubits;
  int iterations = 10;
  int restarts = 10;
  std::uint64_t seed = 12345;
  double eps_w = 1e-6, eps_e = 1e-6;
  std::string out;
  std::string spec_file;
  std::string in;
  double d = 1.0;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--geometry", f.geometry, "chain or ring")->check(CLI::IsMember({"chain", "ring"}));
  sub->add_option("--atoms", f.atoms, "number of hydrogen atoms");
  sub->add_option("--d-min", f.d_min, "first distance (Angstrom)");
  sub->add_option("--d-max", f.d_max, "last distance (Angstrom)");
  sub->add_option("--d-step", f.d_step, "distance step (Angstrom)");
  sub->add_option("--charge", f.charge, "net charge of the scanned species");
  sub->add_option("--ms2", f.ms2, "2 S_z of the scanned species (default: lowest)");
  sub->add_option("--algorithm", f.algorithm, "ivqe or vqsm")->check(CLI::IsMember({"ivqe", "vqsm"}));
  sub->add_option("--cost", f.cost, "gain, interaction or tridiag")
      ->check(CLI::IsMember({"gain", "interaction", "tridiag"}));
  sub->add_option("--trial", f.trial, "hea:N or exact");
  sub->add_option("--layers", f.layers, "layer counts (comma separated)")->delimiter(',');
  sub->add_option("--iterations", f.iterations, "maximum iterations");
  sub->add_option("--restarts", f.restarts, "optimizer restarts per iteration");
  sub->add_option("--seed", f.seed, "base seed");
  sub->add_option("--eps-w", f.eps_w, "weight convergence threshold");
  sub->add_option("--eps-e", f.eps_e, "cost convergence threshold");
  sub->add_option("--out", f.out, "output path (stdout when omitted)");
  sub->add_option("--spec", f.spec_file, "JSON spec file; explicit flags are ignored");
}

ex::ExperimentSpec to_spec(const Flags& f, ex::Kind kind, bool layers_set) {
  if (!f.spec_file.empty()) {
    std::ifstream in(f.spec_file);
    if (!in) throw ex::SpecError("cannot read " + f.spec_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ex::SpecError(std::string("bad spec file: ") + e.what());
    }
    auto s = ex::ExperimentSpec::from_json(j);
    s.kind = kind;
    return s;
  }
  ex::ExperimentSpec s;
  s.kind = kind;
  s.geometry = {f.geometry, f.atoms, f.d_min, f.d_max, f.d_step, f.charge, f.ms2};
  try {
    s.algorithm = vqsm::engine::algorithm_from_string(f.algorithm);
    s.cost = vqsm::engine::cost_from_string(f.cost);
    s.trial = vqsm::engine::trial_from_string(f.trial);
  } catch (const vqsm::Error& e) {
    throw ex::SpecError(e.what());
  }
  // --layers alone selects the HEA depth for single-depth commands.
  if (layers_set && s.trial.kind == vqsm::engine::TrialSource::Kind::Hea && f.layers.size() == 1) {
    s.trial.n_layers = f.layers.front();
  }
  s.layers = f.layers;
  s.qubits = f.qubits;
  s.iterations = f.iterations;
  s.restarts = f.restarts;
  s.seed = f.seed;
  s.eps_w = f.eps_w;
  s.eps_e = f.eps_e;
  s.out = f.out;
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ex::SpecError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterative variational eigensolvers on simulated hydrogen clusters"};
  app.require_subcommand(1);
  Flags f;
  const std::map<std::string, ex::Kind> table_verbs = {
      {"dissociation", ex::Kind::Dissociation}, {"layer-scan", ex::Kind::LayerScan},
      {"iteration-scan", ex::Kind::IterationScan}, {"stochastic", ex::Kind::Stochastic},
      {"charge-gap", ex::Kind::ChargeGap},       {"st-gap", ex::Kind::StGap}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, kind] : table_verbs) {
    subs[name] = app.add_subcommand(name, "write the " + name + " table as CSV");
    add_common(subs[name], f);
  }
  auto* resources = app.add_subcommand("resources", "gate-count estimates as JSON");
  add_common(resources, f);
  resources->add_option("--qubits", f.qubits, "register sizes (comma separated)")->delimiter(',');
  auto* imp = app.add_subcommand("fcidump-import", "run the configured solver on an FCIDUMP file");
  add_common(imp, f);
  imp->add_option("--in", f.in, "FCIDUMP path")->required();
  auto* exp = app.add_subcommand("fcidump-export", "write the MO integrals of one geometry");
  add_common(exp, f);
  exp->add_option("--d", f.d, "distance (Angstrom)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kSpecError;
  }

  try {
    for (const auto& [name, kind] : table_verbs) {
      auto* sub = subs[name];
      if (!sub->parsed()) continue;
      const auto spec = to_spec(f, kind, sub->count("--layers") > 0);
      ex::write_outputs(spec, ex::run_table(spec));
      return 0;
    }
    if (resources->parsed()) {
      const auto spec = to_spec(f, ex::Kind::Resources, false);
      write_text(spec.out, ex::cmd_resources(spec).dump(2) + "\n");
      return 0;
    }
    if (imp->parsed()) {
      auto spec = to_spec(f, ex::Kind::IterationScan, imp->count("--layers") > 0);
      spec.validate();
      if (!std::ifstream(f.in)) throw ex::SpecError("cannot open " + f.in);
      const auto mo = vqsm::chem::read_fcidump_file(f.in);
      const auto p = vqsm::engine::problem_from_mo(mo);
      const auto rep = vqsm::engine::run(spec.run_config(spec.seed), p);
      if (rep.status == vqsm::engine::RunStatus::Failed) throw vqsm::Error(rep.message);
      write_text(spec.out, rep.to_csv());
      if (!spec.out.empty()) {
        nlohmann::json side = {{"spec", spec.to_json()}, {"input", f.in}, {"report", rep.to_json()}};
        write_text(spec.out + ".json", side.dump(2) + "\n");
      }
      return 0;
    }
    if (exp->parsed()) {
      auto spec = to_spec(f, ex::Kind::Dissociation, false);
      spec.geometry.d_min = spec.geometry.d_max = f.d;
      spec.validate();
      const auto p = vqsm::engine::build_problem(spec.geometry.at(f.d));
      write_text(spec.out, vqsm::chem::write_fcidump(p.mo));
      return 0;
    }
  } catch (const ex::SpecError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kSpecError;
  } catch (const vqsm::GeometryError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kSpecError;
  } catch (const vqsm::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kSpecError;
  } catch (const vqsm::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kNumericalError;
  }
  return kSpecError;
}
