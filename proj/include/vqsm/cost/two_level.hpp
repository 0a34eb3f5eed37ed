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

#include "vqsm/common.hpp"

namespace vqsm::cost {

/// 2x2 effective Hamiltonian between a reference state (level 0) and a
/// trial state (level 1). h10 is implied as conj(h01).
struct TwoLevelBlock {
  double h00 = 0.0;
  double h11 = 0.0;
  Complex h01{};

  double gap() const { return h11 - h00; }
};

struct TwoLevelGround {
  double energy = 0.0;
  /// Weight amplitude of the reference state, in [0, 1].
  double omega = 1.0;
  /// Relative sign of the trial component (real blocks).
  int nu = 1;
  /// Ground vector (omega, c1) with the reference coefficient real and >= 0.
  Eigen::Vector2cd vector() const { return {omega, trial_coefficient}; }
  Complex trial_coefficient{};
};

/// 2x2 density block of the reference/complement decomposition.
struct GammaBlock {
  Eigen::Matrix2d matrix;
};

/// Degeneracy guard of the gain energy.
inline constexpr double kDegenerateGap = 1e-12;

/// Delta/2 * (1 - sqrt(1 + 4 h01 h10 / Delta^2)), Delta = h11 - h00, taken
/// literally: negative only when Delta > 0. Throws DegenerateGapError when
/// |Delta| < kDegenerateGap.
double gain_energy(const TwoLevelBlock& b);

/// -sqrt(h01 h10) = -|h01|.
double interaction_energy(const TwoLevelBlock& b);

/// -|H_{n,n-1}| of an (n+1)x(n+1) projected Hamiltonian, n >= 1.
double tridiag_cost(const CMatrix& h_sub);

/// Exact lower root and eigenvector of the block.
TwoLevelGround two_level_ground(const TwoLevelBlock& b);

/// [[w^2, sqrt(w^2(1-w^2))], [sqrt(w^2(1-w^2)), 1-w^2]]; DomainError unless 0 <= w <= 1.
GammaBlock gamma_block(double omega);

/// tr(Gamma * H^R) for a real-coupled block.
double contract(const GammaBlock& g, const TwoLevelBlock& b);

}  // namespace vqsm::cost
