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

// Statevector and operator kernels. Every kernel exists twice: a serial
// reference in `serial::` and an OpenMP version in `omp::` that must produce
// identical results independent of the thread count. The unqualified entry
// points dispatch on problem size.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vqsm/common.hpp"

namespace vqsm::kernels {

/// Pauli term with its Y phase folded into the coefficient:
/// (P psi)[i] = coeff * (-1)^{|z & (i ^ x)|} * psi[i ^ x].
struct PauliTerm {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  Complex coeff;
};

/// Compressed sparse row matrix over the computational basis.
struct CsrMatrix {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::uint32_t> col;
  std::vector<Complex> val;

  std::size_t nnz() const { return val.size(); }
};

/// Builds the CSR realization of sum_t P_t (plus constant * identity).
/// Rows are assembled in ascending column order.
CsrMatrix build_csr(std::span<const PauliTerm> terms, Complex constant, std::size_t dim);

/// Amplitude count above which the dispatching entry points use OpenMP.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

namespace serial {
void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out);
void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out);
void apply_ry(std::span<Complex> amp, int qubit, double angle);
void apply_cnot(std::span<Complex> amp, int control, int target);
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
}  // namespace serial

namespace omp {
void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out);
void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out);
void apply_ry(std::span<Complex> amp, int qubit, double angle);
void apply_cnot(std::span<Complex> amp, int control, int target);
/// Blocked reduction with a fixed block size, summed in block order.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
}  // namespace omp

void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out);
void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out);
void apply_ry(std::span<Complex> amp, int qubit, double angle);
void apply_cnot(std::span<Complex> amp, int control, int target);
/// Conjugate-linear in the first argument.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace vqsm::kernels
