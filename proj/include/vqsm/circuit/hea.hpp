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
#include <string>
#include <vector>

#include "vqsm/circuit/state_vector.hpp"

namespace vqsm::circuit {

enum class Entangler { Linear, AllToAll };

/// Hardware-efficient R_y/CNOT ansatz: an initial R_y layer on every qubit,
/// then `n_layers` repetitions of [CNOT entangler, R_y layer].
struct HeaCircuit {
  int n_qubits = 0;
  int n_layers = 1;
  Entangler entangler = Entangler::Linear;
  std::vector<double> params;  // radians, layer-major, qubit-minor
  /// Optional initial computational basis state; |0...0> when empty.
  std::optional<std::uint64_t> initial_index;

  static int param_count(int n_qubits, int n_layers) { return (n_layers + 1) * n_qubits; }
  static int cnot_count(int n_qubits, int n_layers, Entangler e);
};

/// Workspace-reusing evaluation: writes U(theta)|init> into `out`.
void run_hea_into(const HeaCircuit& circ, StateVector& out);
StateVector run_hea(const HeaCircuit& circ);

/// Gate-count model for measuring off-diagonal elements with a Hadamard test.
struct ResourceModel {
  int cnots_per_controlled_ry = 2;
  int cnots_per_toffoli = 6;
  /// Number of controlled circuits per off-diagonal element.
  int controlled_circuits = 2;
};

struct ResourceEstimate {
  int params = 0;
  int cnot_native = 0;
  int cnot_hadamard_test = 0;
  ResourceModel assumptions;
};

ResourceEstimate estimate_resources(int n_qubits, int n_layers, Entangler e,
                                    const ResourceModel& model = {});

std::string to_string(Entangler e);
Entangler entangler_from_string(const std::string& s);

}  // namespace vqsm::circuit
