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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vqsm/kernels/kernels.hpp"
#include "vqsm/qubit/pauli.hpp"

namespace vqsm::qubit {

/// Hermitian qubit operator: constant + sum_P c_P P with real c_P.
/// Coefficients with |c| <= kPruneTolerance are never stored.
class QubitHamiltonian {
 public:
  using TermMap = std::map<PauliString, double>;
  static constexpr double kPruneTolerance = 1e-12;
  static constexpr int kMaxDenseQubits = 14;

  QubitHamiltonian() = default;
  explicit QubitHamiltonian(int n_qubits, double constant = 0.0);

  /// Canonicalizes a general operator. Throws DomainError when an imaginary
  /// part exceeds `hermitian_tol` (the operator is not Hermitian).
  static QubitHamiltonian from_operator(const PauliOperator& op, double hermitian_tol = 1e-10);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  double constant() const { return constant_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * P; the identity string goes to the constant.
  void add_term(const PauliString& p, double c);
  void add_constant(double c) { constant_ += c; }

  PauliOperator to_operator() const;

  /// Term-wise sparse application out = H in.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  CVector apply(const CVector& in) const;

  /// Kernel-ready term list with Y phases folded in (constant excluded).
  std::vector<kernels::PauliTerm> kernel_terms() const;
  kernels::CsrMatrix to_csr() const;

  /// Dense 2^n x 2^n matrix; CapacityError beyond kMaxDenseQubits.
  CMatrix dense_matrix() const;

  /// Sub-block <i|H|j> over the given basis indices.
  CMatrix restricted_matrix(const std::vector<std::uint64_t>& indices) const;

 private:
  int n_qubits_ = 0;
  double constant_ = 0.0;
  TermMap terms_;
};

/// [A, B] as a Pauli operator.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

// Pauli-list text format: one "coeff WORD" per line, character k of WORD acts
// on qubit k; the identity word carries the constant. '#' starts a comment.
std::string write_pauli_list(const QubitHamiltonian& h);
QubitHamiltonian parse_pauli_list(std::istream& in);
QubitHamiltonian parse_pauli_list_string(const std::string& text);

}  // namespace vqsm::qubit
