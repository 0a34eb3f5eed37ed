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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vqsm::opt {

using Objective = std::function<double(std::span<const double>)>;
/// Builds a private objective (own workspace) for one worker.
using ObjectiveFactory = std::function<Objective()>;

enum class InitKind { Zeros, UniformRandom };

struct OptimizerConfig {
  int max_evals = 150000;
  int restarts = 20;
  InitKind init = InitKind::UniformRandom;
  double ftol = 1e-10;
  double xtol = 1e-8;
  double initial_step = 0.5;
  /// Fresh simplices around the incumbent after a local stop.
  int local_restarts = 2;
  std::uint64_t seed = 12345;
  /// Worker threads for multi_start; 0 uses the OpenMP default.
  int threads = 0;
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool budget_exhausted = false;
};

/// Adaptive Nelder-Mead. Points where f throws vqsm::Error or returns NaN
/// count as +inf.
MinimizeResult minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& cfg);

struct StochasticStudy {
  std::vector<double> samples;
  std::vector<std::uint64_t> seeds;
  double c_min = 0.0;
  double q10 = 0.0, q25 = 0.0, q50 = 0.0, q75 = 0.0;

  /// Recompute quantiles of (sample - c_min).
  void summarize(double reference);
  std::string to_csv() const;
};

/// Linear-interpolation quantile of a sample (q in [0, 1]).
double quantile(std::vector<double> values, double q);

/// Seed of restart r, derived with splitmix64.
std::uint64_t restart_seed(std::uint64_t base, int r);

struct MultiStartResult {
  MinimizeResult best;
  std::vector<MinimizeResult> runs;  // in restart order
  StochasticStudy study;
  int total_evals = 0;
};

/// cfg.restarts independent minimizations from seeded starts. Runs are
/// spread over threads; merging is by restart index.
MultiStartResult multi_start(const ObjectiveFactory& factory, int dim, const OptimizerConfig& cfg,
                             std::optional<std::vector<double>> first_start = std::nullopt);

}  // namespace vqsm::opt
