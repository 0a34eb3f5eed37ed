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

#include "vqsm/circuit/hea.hpp"

namespace vqsm::circuit {

int HeaCircuit::cnot_count(int n_qubits, int n_layers, Entangler e) {
  const int per_layer = e == Entangler::Linear ? n_qubits - 1 : n_qubits * (n_qubits - 1) / 2;
  return n_layers * std::max(per_layer, 0);
}

void run_hea_into(const HeaCircuit& circ, StateVector& out) {
  if (circ.n_qubits <= 0 || circ.n_layers < 0) throw DomainError("invalid HEA shape");
  if (static_cast<int>(circ.params.size()) != HeaCircuit::param_count(circ.n_qubits, circ.n_layers)) {
    throw DomainError("HEA parameter count must be (n_layers + 1) * n_qubits");
  }
  const std::size_t dim = std::size_t{1} << circ.n_qubits;
  if (out.n_qubits() != circ.n_qubits) out = StateVector(circ.n_qubits);
  auto& amp = out.amplitudes();
  amp.setZero();
  const std::uint64_t init = circ.initial_index.value_or(0);
  if (init >= dim) throw DomainError("initial basis index out of range");
  amp[static_cast<Eigen::Index>(init)] = 1.0;

  const int n = circ.n_qubits;
  std::size_t k = 0;
  for (int q = 0; q < n; ++q) kernels::apply_ry(out.span(), q, circ.params[k++]);
  for (int layer = 0; layer < circ.n_layers; ++layer) {
    if (circ.entangler == Entangler::Linear) {
      for (int q = 0; q + 1 < n; ++q) kernels::apply_cnot(out.span(), q, q + 1);
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) kernels::apply_cnot(out.span(), a, b);
    }
    for (int q = 0; q < n; ++q) kernels::apply_ry(out.span(), q, circ.params[k++]);
  }
}

StateVector run_hea(const HeaCircuit& circ) {
  StateVector out(circ.n_qubits);
  run_hea_into(circ, out);
  return out;
}

ResourceEstimate estimate_resources(int n_qubits, int n_layers, Entangler e,
                                    const ResourceModel& model) {
  if (n_qubits <= 0 || n_layers < 0) throw DomainError("invalid circuit shape");
  ResourceEstimate r;
  r.params = HeaCircuit::param_count(n_qubits, n_layers);
  r.cnot_native = HeaCircuit::cnot_count(n_qubits, n_layers, e);
  r.cnot_hadamard_test = model.controlled_circuits *
                         (model.cnots_per_controlled_ry * r.params +
                          model.cnots_per_toffoli * r.cnot_native);
  r.cnot_hadamard_test = std::max(r.cnot_hadamard_test, r.cnot_native);
  r.assumptions = model;
  return r;
}

std::string to_string(Entangler e) { return e == Entangler::Linear ? "linear" : "all-to-all"; }

Entangler entangler_from_string(const std::string& s) {
  if (s == "linear") return Entangler::Linear;
  if (s == "all-to-all" || s == "full") return Entangler::AllToAll;
  throw DomainError("unknown entangler '" + s + "'");
}

}  // namespace vqsm::circuit
