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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqsm/chem/geometry.hpp"
#include "vqsm/engine/subspace.hpp"

namespace vqsm::experiments {

/// Invalid experiment description; the CLI maps it to exit code 2.
class SpecError : public Error {
 public:
  using Error::Error;
};

enum class Kind { Dissociation, LayerScan, IterationScan, Stochastic, ChargeGap, StGap, Resources };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct GeometryTemplate {
  std::string shape = "chain";  // chain | ring
  int n_atoms = 4;
  double d_min = 1.0;
  double d_max = 1.0;
  double d_step = 0.1;
  /// Charge and 2 S_z of the scanned species; ms2 < 0 picks the lowest spin.
  int charge = 0;
  int ms2 = -1;

  /// d_min, d_min + step, ... up to d_max (inclusive within step/1000).
  std::vector<double> distances() const;
  /// Template species at distance d.
  chem::Geometry at(double d) const;
  chem::Geometry at(double d, int charge, int ms2) const;
};

struct ExperimentSpec {
  Kind kind = Kind::Dissociation;
  GeometryTemplate geometry;
  engine::Algorithm algorithm = engine::Algorithm::VQSM;
  engine::CostKind cost = engine::CostKind::Interaction;
  engine::TrialSource trial = engine::TrialSource::hea(1);
  /// Layer counts for layer-scan, stochastic and resources.
  std::vector<int> layers{1};
  /// Register sizes for resources; empty means 2 * n_atoms.
  std::vector<int> qubits;
  int iterations = 10;
  int restarts = 10;
  std::uint64_t seed = 12345;
  double eps_w = 1e-6;
  double eps_e = 1e-6;
  std::string out;

  /// Throws SpecError.
  void validate() const;
  nlohmann::json to_json() const;
  static ExperimentSpec from_json(const nlohmann::json& j);

  /// Run configuration for one row, with the row's derived seed.
  engine::RunConfig run_config(std::uint64_t row_seed) const;
};

/// Seed of row `row`, independent of scheduling.
std::uint64_t row_seed(std::uint64_t base, int row);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Header row then one line per row, %.12g.
  std::string to_csv() const;
};

Table cmd_dissociation(const ExperimentSpec& spec);
Table cmd_layer_scan(const ExperimentSpec& spec);
Table cmd_iteration_scan(const ExperimentSpec& spec);
Table cmd_stochastic(const ExperimentSpec& spec);
Table cmd_charge_gap(const ExperimentSpec& spec);
Table cmd_st_gap(const ExperimentSpec& spec);
nlohmann::json cmd_resources(const ExperimentSpec& spec);

Table run_table(const ExperimentSpec& spec);

/// Gnuplot script plotting every column of `csv_path` against the first.
std::string gnuplot_template(const Table& t, const std::string& csv_path);

/// Writes <out>, <out>.json (spec and seed) and <out>.gp.
void write_outputs(const ExperimentSpec& spec, const Table& t);

}  // namespace vqsm::experiments
