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
#include <vector>

#include "vqsm/circuit/state_vector.hpp"
#include "vqsm/qubit/determinant.hpp"
#include "vqsm/qubit/hamiltonian.hpp"

namespace vqsm::oracles {

/// Lowest two eigenpairs of H inside one (N, S_z) sector.
struct SpectrumSlice {
  double e0 = 0.0;
  double e1 = 0.0;
  qubit::Sector sector;
  circuit::StateVector ground_vector;  // embedded in the full register
  RVector eigenvalues;                 // ascending, whole sector (or spin block)
};

struct FciOptions {
  /// Restrict further to states with <S^2> equal to this value.
  std::optional<double> s_squared;
  std::size_t max_dimension = 4096;
};

/// Dense Hermitian eigensolve of the sector block. The spin filter first
/// diagonalizes S^2 inside the sector and keeps the requested eigenspace.
SpectrumSlice fci_solve(const qubit::QubitHamiltonian& h, const qubit::Sector& sector,
                        const FciOptions& opts = {});

/// Lowest eigenvalue of the whole Fock space (no symmetry restriction).
double full_space_ground_energy(const qubit::QubitHamiltonian& h);

/// (e1 / e0)^n for n = 1..n_max. DomainError unless e0 < 0.
std::vector<double> power_ratio_curve(const SpectrumSlice& slice, int n_max);

}  // namespace vqsm::oracles
