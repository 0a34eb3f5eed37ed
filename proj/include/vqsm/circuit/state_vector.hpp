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

#include <span>

#include "vqsm/qubit/determinant.hpp"
#include "vqsm/qubit/hamiltonian.hpp"

namespace vqsm::circuit {

/// Amplitudes of an n-qubit register; qubit 0 is the least significant bit.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0>
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, CVector amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const CVector& amplitudes() const { return amp_; }
  CVector& amplitudes() { return amp_; }
  std::span<Complex> span() { return {amp_.data(), dim()}; }
  std::span<const Complex> span() const { return {amp_.data(), dim()}; }
  Complex operator[](std::size_t i) const { return amp_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amp_.norm(); }
  void normalize();

 private:
  int n_qubits_ = 0;
  CVector amp_;
};

/// Computational basis state of the determinant's occupation bitstring.
StateVector determinant_state(const qubit::Determinant& d);

void apply_ry(StateVector& state, int qubit, double angle);
void apply_cnot(StateVector& state, int control, int target);

/// <bra|ket>
Complex overlap(const StateVector& bra, const StateVector& ket);
/// <bra|H|ket>, exact, through term-wise Pauli application.
Complex matrix_element(const StateVector& bra, const qubit::QubitHamiltonian& h,
                       const StateVector& ket);
double expectation(const StateVector& psi, const qubit::QubitHamiltonian& h);

}  // namespace vqsm::circuit
