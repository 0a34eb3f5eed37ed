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

#include <vector>

#include "vqsm/common.hpp"

namespace vqsm::oracles {

/// (alpha, beta) bands of a Hermitian matrix in a Krylov-type basis.
struct TridiagonalMatrix {
  std::vector<double> alpha;
  std::vector<double> beta;  // |beta| = |alpha| - 1, nonnegative
  std::vector<CVector> basis;

  std::size_t size() const { return alpha.size(); }
  RMatrix dense() const;
  /// Lowest eigenvalue of the leading k x k block (k <= size()).
  double ground_energy(std::size_t k) const;
};

inline constexpr double kLanczosBreakdown = 1e-10;

/// Three-term recurrence with full reorthogonalization (classical Gram-Schmidt
/// applied twice). Stops early on breakdown.
TridiagonalMatrix lanczos(const CMatrix& h, const CVector& v0, std::size_t n_steps);

/// Householder reduction with the first basis vector fixed to v0. Returns all
/// dim bands; magnitudes are reported for the off-diagonal.
TridiagonalMatrix householder_tridiag(const CMatrix& h, const CVector& v0);

}  // namespace vqsm::oracles
