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

#include "vqsm/chem/integrals.hpp"

namespace vqsm::chem {

struct ScfConfig {
  double density_tol = 1e-10;
  double energy_tol = 1e-12;
  int max_cycles = 200;
  /// Fraction of the previous density mixed in during the first cycles.
  double damping = 0.3;
  int damping_cycles = 5;
  /// Virtual-orbital level shifts (Hartree) tried in turn when the plain
  /// iteration does not converge. Empty disables the fallback.
  std::vector<double> fallback_level_shifts{0.5, 1.0};
  int fallback_max_cycles = 3000;
  /// Follow negative modes of the real RHF orbital Hessian after
  /// convergence and re-converge from the rotated orbitals.
  bool follow_instabilities = true;
  int max_stability_rounds = 8;
  double stability_tol = 1e-6;
};

struct ScfResult {
  RMatrix coefficients;       // columns are MOs, C^T S C = 1
  RVector orbital_energies;   // ascending
  double energy = 0.0;        // total, including nuclear repulsion
  int cycles = 0;
  double level_shift = 0.0;  // shift that produced convergence
  std::vector<double> energy_history;
  /// Number of instability-following restarts that lowered the energy.
  int stability_rounds = 0;
  /// Lowest eigenvalue of the orbital Hessian at the returned solution.
  double hessian_min = 0.0;
};

/// Real closed-shell orbital Hessian (A+B) over occupied-virtual pairs,
/// ordered ia with i major.
RMatrix rhf_orbital_hessian(const IntegralSet& ints, const ScfResult& r, int n_occ);

/// Closed-shell restricted Hartree-Fock with Löwdin orthogonalization and
/// core-Hamiltonian guess. Throws ScfError (carrying the last energy) when
/// `max_cycles` is exhausted. Saddle points are left along the lowest
/// Hessian mode unless disabled.
ScfResult rhf_scf(const IntegralSet& ints, int n_elec, const ScfConfig& cfg = {});

}  // namespace vqsm::chem
