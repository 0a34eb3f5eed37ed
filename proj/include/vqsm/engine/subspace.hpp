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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqsm/circuit/hea.hpp"
#include "vqsm/cost/two_level.hpp"
#include "vqsm/engine/problem.hpp"
#include "vqsm/kernels/kernels.hpp"
#include "vqsm/opt/nelder_mead.hpp"

namespace vqsm::engine {

enum class Algorithm { IVQE, VQSM };
enum class CostKind { Gain, Interaction, TriDiag };

struct TrialSource {
  enum class Kind { Hea, ExactReflection } kind = Kind::Hea;
  int n_layers = 1;
  circuit::Entangler entangler = circuit::Entangler::Linear;

  static TrialSource hea(int layers) { return {Kind::Hea, layers, circuit::Entangler::Linear}; }
  static TrialSource exact() { return {Kind::ExactReflection, 0, circuit::Entangler::Linear}; }
};

struct RunConfig {
  Algorithm algorithm = Algorithm::VQSM;
  CostKind cost = CostKind::Interaction;
  TrialSource trial;
  double eps_w = 1e-6;
  double eps_e = 1e-6;
  int max_iterations = 10;
  opt::OptimizerConfig optimizer;
  /// Keep only the guess-sector component of each HEA trial before use.
  bool project_trial_to_sector = false;
  /// Exact reflections act on the whole register instead of the sector.
  bool full_space_reflection = false;

  void validate() const;
};

/// Orthonormal trial basis with its projected Hamiltonian and ground state.
struct SubspaceState {
  std::vector<CVector> basis;
  std::vector<CVector> h_basis;  // H applied to each basis vector
  CMatrix h_mat;
  CVector ground_coeffs;
  double e0 = 0.0;
  double omega = 1.0;

  std::size_t size() const { return basis.size(); }
  CVector ground_vector() const;
  CVector h_ground_vector() const;
};

SubspaceState initial_state(const kernels::CsrMatrix& h, const CVector& guess);

inline constexpr double kLinearDependence = 1e-8;

/// Modified Gram-Schmidt applied twice. LinearDependenceError when the
/// residual norm falls below kLinearDependence.
CVector orthogonalize_against(const std::vector<CVector>& basis, const CVector& v);

/// Read-only per-iteration cost context shared by optimizer workers.
class CostEvaluator {
 public:
  CostEvaluator(const SubspaceState& s, const kernels::CsrMatrix& h, const RunConfig& cfg,
                const std::vector<std::uint8_t>* sector_mask);

  struct Scratch {
    CVector t;
    CVector ht;
    CVector c;
  };

  /// Cost of a raw (normalized) trial vector; 0 for linearly dependent or
  /// sector-empty trials.
  double operator()(const CVector& raw, Scratch& scratch) const;
  /// Block between the current ground state and an orthonormalized trial.
  cost::TwoLevelBlock block(const CVector& t_orth, Scratch& scratch) const;
  /// Orthogonalized trial, or nullopt when nothing is left.
  std::optional<CVector> prepare(const CVector& raw) const;

 private:
  const SubspaceState& state_;
  const kernels::CsrMatrix& h_;
  CostKind kind_;
  const std::vector<std::uint8_t>* mask_;
  CVector w_ground_;  // H |Psi0^(n-1)>
  double h00_ = 0.0;
  CMatrix b_;         // basis as columns
  CMatrix hb_;        // H times basis
  CVector bw_;        // B^H w

};

double evaluate_cost(const SubspaceState& s, const kernels::CsrMatrix& h, const CVector& trial_raw,
                     const RunConfig& cfg);

/// Largest sector whose dense block is built for HEA runs.
inline constexpr std::size_t kDenseSectorLimit = 4096;

/// Everything a run needs besides the config.
struct RunContext {
  const Problem* problem = nullptr;
  kernels::CsrMatrix h_csr;
  std::vector<std::uint64_t> sector_indices;
  std::vector<std::uint8_t> sector_mask;
  CMatrix h_dense;  // sector block, or full matrix in full-space mode; may be empty
  bool full_space_mode = false;
  std::optional<oracles::SpectrumSlice> fci;

  static RunContext make(const Problem& p, const RunConfig& cfg, bool attach_fci = true);
  CVector restrict(const CVector& full) const;
  CVector embed(const CVector& local) const;
};

struct IterationRecord {
  int n = 0;
  double e0 = 0.0;
  double cost = 0.0;
  double omega = 1.0;
  double fidelity = -1.0;  // |<FCI|Psi0^(n)>|^2, -1 when no oracle
  double error = -1.0;     // e0 - E_FCI, -1 when no oracle
  int evals = 0;
  /// False when the step stopped on the cost criterion without updating.
  bool accepted = true;
  double n_expect = 0.0;
  double sz_expect = 0.0;
  std::vector<double> theta;
  std::vector<double> subspace_eigenvalues;
  /// Final cost of every optimizer restart (HEA trials only).
  std::optional<opt::StochasticStudy> study;
};

enum class RunStatus { Converged, MaxIterations, Failed };
std::string to_string(RunStatus s);

struct ConvergenceReport {
  std::vector<IterationRecord> records;
  std::optional<double> rate;
  RunStatus status = RunStatus::MaxIterations;
  std::string message;
  double e_reference = 0.0;  // <guess|H|guess>
  std::optional<double> e_fci;

  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::vector<double> errors() const;
};

/// One optimization plus subspace update. Returns the record of the step;
/// the state is left unchanged when the cost indicates convergence.
IterationRecord ivqe_step(SubspaceState& s, const RunContext& ctx, const RunConfig& cfg, int n);
IterationRecord vqsm_step(SubspaceState& s, const RunContext& ctx, const RunConfig& cfg, int n);

ConvergenceReport run(const RunConfig& cfg, const Problem& p, bool attach_fci = true);
ConvergenceReport run(const RunConfig& cfg, const RunContext& ctx);

/// Geometric rate from ln(error) vs n over the prefix above 1e-10.
double fit_rate(const std::vector<double>& errors);

std::string to_string(Algorithm a);
std::string to_string(CostKind c);
Algorithm algorithm_from_string(const std::string& s);
CostKind cost_from_string(const std::string& s);
/// "hea:N" or "exact".
TrialSource trial_from_string(const std::string& s);
std::string to_string(const TrialSource& t);

}  // namespace vqsm::engine
