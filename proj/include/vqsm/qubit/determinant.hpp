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
#include <vector>

#include "vqsm/common.hpp"

namespace vqsm::qubit {

/// Occupation bitstring over 2 n_orb spin orbitals (blocked alpha/beta).
struct Determinant {
  std::uint64_t bits = 0;
  int n_qubits = 0;

  int n_alpha() const;
  int n_beta() const;
  int n_electrons() const { return n_alpha() + n_beta(); }
  int ms2() const { return n_alpha() - n_beta(); }

  /// Aufbau determinant occupying the lowest MOs of each spin.
  static Determinant aufbau(int n_orb, int n_alpha, int n_beta);
  static Determinant from_occupations(int n_orb, const std::vector<int>& alpha,
                                      const std::vector<int>& beta);

  auto operator<=>(const Determinant&) const = default;
};

/// Particle-number / spin-projection sector (n_elec, 2 S_z).
struct Sector {
  int n_elec = 0;
  int sz2 = 0;
  auto operator<=>(const Sector&) const = default;
};

/// Computational basis indices whose alpha and beta popcounts realize the
/// sector, ascending. Empty when the quantum numbers are unrealizable.
std::vector<std::uint64_t> sector_projector(int n_elec, int sz2, int n_qubits);

Sector sector_of(const Determinant& d);

}  // namespace vqsm::qubit
