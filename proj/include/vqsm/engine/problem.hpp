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

#include "vqsm/chem/geometry.hpp"
#include "vqsm/chem/mo_integrals.hpp"
#include "vqsm/chem/scf.hpp"
#include "vqsm/oracles/fci.hpp"
#include "vqsm/qubit/determinant.hpp"
#include "vqsm/qubit/hamiltonian.hpp"

namespace vqsm::engine {

/// A qubit Hamiltonian together with its reference determinant.
struct Problem {
  chem::MOIntegrals mo;
  qubit::QubitHamiltonian h;
  qubit::Determinant guess;
  /// Electron count of the closed-shell SCF whose orbitals are used.
  int scf_electrons = 0;
  /// RHF energy of that SCF species.
  double e_scf = 0.0;
  /// <guess|H|guess>, the Hartree-Fock-like reference energy of the target.
  double e_guess = 0.0;

  qubit::Sector sector() const { return qubit::sector_of(guess); }
};

/// Electron count of the closed-shell species whose RHF orbitals are
/// re-occupied: the target itself when closed shell, else the neutral
/// molecule when its electron count is even, else one extra electron.
int scf_reference_electrons(const chem::Geometry& g);

Problem build_problem(const chem::Geometry& g, const chem::ScfConfig& scf = {});

/// Aufbau guess from the electron count and MS2 recorded in the integrals.
Problem problem_from_mo(const chem::MOIntegrals& mo);

oracles::SpectrumSlice solve_fci(const Problem& p, const oracles::FciOptions& opts = {});

}  // namespace vqsm::engine
