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

#include "vqsm/circuit/state_vector.hpp"

namespace vqsm::circuit {

namespace {
void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits()) throw DomainError("qubit index out of range");
}
void check_dims(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw PreconditionError("state dimensions differ");
}
}  // namespace

StateVector::StateVector(int n_qubits) : StateVector(basis_state(n_qubits, 0)) {}

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amp_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amp_.size()) != (std::size_t{1} << n_qubits)) {
    throw PreconditionError("amplitude count must be 2^n");
  }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits < 0 || n_qubits > 30) throw DomainError("unsupported qubit count");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) throw DomainError("basis index out of range");
  CVector a = CVector::Zero(static_cast<Eigen::Index>(dim));
  a[static_cast<Eigen::Index>(index)] = 1.0;
  return {n_qubits, std::move(a)};
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize a zero state");
  amp_ /= n;
}

StateVector determinant_state(const qubit::Determinant& d) {
  if (d.n_qubits <= 0 || d.n_qubits > 30) throw DomainError("determinant length unsupported");
  if (d.n_qubits < 64 && (d.bits >> d.n_qubits) != 0) {
    throw PreconditionError("occupation bitstring longer than the register");
  }
  return StateVector::basis_state(d.n_qubits, d.bits);
}

void apply_ry(StateVector& state, int qubit, double angle) {
  check_qubit(state, qubit);
  kernels::apply_ry(state.span(), qubit, angle);
}

void apply_cnot(StateVector& state, int control, int target) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) throw DomainError("CNOT control equals target");
  kernels::apply_cnot(state.span(), control, target);
}

Complex overlap(const StateVector& bra, const StateVector& ket) {
  check_dims(bra, ket);
  return kernels::dot(bra.span(), ket.span());
}

Complex matrix_element(const StateVector& bra, const qubit::QubitHamiltonian& h,
                       const StateVector& ket) {
  check_dims(bra, ket);
  if (ket.dim() != h.dim()) throw PreconditionError("Hamiltonian and state dimensions differ");
  CVector hk(static_cast<Eigen::Index>(ket.dim()));
  h.apply(ket.span(), std::span<Complex>(hk.data(), ket.dim()));
  return kernels::dot(bra.span(), std::span<const Complex>(hk.data(), ket.dim()));
}

double expectation(const StateVector& psi, const qubit::QubitHamiltonian& h) {
  return matrix_element(psi, h, psi).real();
}

}  // namespace vqsm::circuit
