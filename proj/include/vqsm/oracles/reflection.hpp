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
#include <optional>
#include <vector>

#include "vqsm/common.hpp"

namespace vqsm::oracles {

/// Closed-form minimizer of the interaction cost over unit vectors orthogonal
/// to psi_prev and to a forbidden set.
struct InteractionOptimum {
  bool eigenstate_reached = false;
  CVector vector;
  double c_min = 0.0;
};

inline constexpr double kEigenstateResidual = 1e-10;

InteractionOptimum exact_interaction_optimum(const CMatrix& h, const CVector& psi_prev,
                                             const std::vector<CVector>& forbidden = {});

enum class ReflectionCost { Gain, Interaction };

struct ReflectionConfig {
  int max_iters = 20000;
  double grad_tol = 1e-11;
  double ftol = 1e-15;
  std::uint64_t seed = 7;
  /// Start point; a random vector in the complement when empty.
  std::optional<CVector> start;
};

struct ReflectionResult {
  CVector vector;  // unit trial vector in the complement
  double c_star = 0.0;
  int iterations = 0;
  bool converged = false;
  bool warning = false;
  /// Relative error of the analytic directional derivative vs central
  /// differences at the start point.
  double gradient_check = 0.0;
};

/// Projected gradient descent on the unit sphere of the complement with
/// retraction by normalization and backtracking line search.
ReflectionResult minimize_reflection(ReflectionCost cost, const CMatrix& h, const CVector& psi_prev,
                                     const std::vector<CVector>& forbidden,
                                     const ReflectionConfig& cfg = {});

/// Orthonormal basis of span(vectors) by modified Gram-Schmidt twice,
/// dropping directions with residual below tol.
std::vector<CVector> orthonormal_span(const std::vector<CVector>& vectors, double tol = 1e-10);

}  // namespace vqsm::oracles
