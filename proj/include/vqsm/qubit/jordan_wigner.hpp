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

#include "vqsm/chem/mo_integrals.hpp"
#include "vqsm/qubit/hamiltonian.hpp"

namespace vqsm::qubit {

/// Spin-orbital layout: all alpha orbitals first, then all beta, each block
/// in MO order. Swap this single function to change the convention.
inline int spin_orbital(int mo, bool beta, int n_orb) { return beta ? n_orb + mo : mo; }

/// a_p^dagger = (X_p - i Y_p)/2 (x) Z_{q<p}.
PauliOperator creation(int p, int n_qubits);
PauliOperator annihilation(int p, int n_qubits);

/// H = e_nuc + sum h_pq a+_p a_q + 1/2 sum (pq|rs) a+_p a+_r a_s a_q over
/// spin orbitals, mapped with Jordan-Wigner.
QubitHamiltonian jordan_wigner(const chem::MOIntegrals& mo);

/// Total particle number N.
QubitHamiltonian number_operator(int n_orb);
/// S_z = (N_alpha - N_beta)/2.
QubitHamiltonian sz_operator(int n_orb);
/// S^2 = S_- S_+ + S_z (S_z + 1).
QubitHamiltonian s_squared_operator(int n_orb);

}  // namespace vqsm::qubit
