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

#include "vqsm/cost/two_level.hpp"

#include <cmath>

namespace vqsm::cost {

double gain_energy(const TwoLevelBlock& b) {
  const double delta = b.gap();
  if (std::abs(delta) < kDegenerateGap) {
    throw DegenerateGapError("gain energy undefined for degenerate levels");
  }
  const double coupling = std::norm(b.h01);  // h01 * h10
  return 0.5 * delta * (1.0 - std::sqrt(1.0 + 4.0 * coupling / (delta * delta)));
}

double interaction_energy(const TwoLevelBlock& b) { return -std::abs(b.h01); }

double tridiag_cost(const CMatrix& h_sub) {
  const Eigen::Index n = h_sub.rows() - 1;
  if (n < 1 || h_sub.cols() != h_sub.rows()) {
    throw PreconditionError("tridiagonal cost needs a square matrix of size >= 2");
  }
  return -std::sqrt(std::abs(h_sub(n, n - 1) * h_sub(n - 1, n)));
}

TwoLevelGround two_level_ground(const TwoLevelBlock& b) {
  const double half_gap = 0.5 * b.gap();
  const double coupling = std::abs(b.h01);
  const double s = std::hypot(half_gap, coupling);
  TwoLevelGround g;
  g.energy = 0.5 * (b.h00 + b.h11) - s;
  if (coupling == 0.0) {
    const bool reference_lower = b.h00 <= b.h11;
    g.omega = reference_lower ? 1.0 : 0.0;
    g.trial_coefficient = reference_lower ? 0.0 : 1.0;
    g.nu = 1;
    return g;
  }
  const double w2 = std::clamp(0.5 * (1.0 + half_gap / s), 0.0, 1.0);
  g.omega = std::sqrt(w2);
  g.trial_coefficient = -std::sqrt(1.0 - w2) * std::conj(b.h01) / coupling;
  g.nu = b.h01.real() > 0.0 ? -1 : 1;
  return g;
}

GammaBlock gamma_block(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) throw DomainError("omega must lie in [0, 1]");
  const double w2 = omega * omega;
  const double off = std::sqrt(w2 * (1.0 - w2));
  GammaBlock g;
  g.matrix << w2, off, off, 1.0 - w2;
  return g;
}

double contract(const GammaBlock& g, const TwoLevelBlock& b) {
  // Trial level rephased so the ground vector is nonnegative: h01 -> -|h01|.
  return g.matrix(0, 0) * b.h00 + g.matrix(1, 1) * b.h11 - 2.0 * g.matrix(0, 1) * std::abs(b.h01);
}

}  // namespace vqsm::cost
