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

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "vqsm/common.hpp"

namespace vqsm::qubit {

/// Tensor product of single-qubit Paulis encoded as bit masks: on qubit k the
/// factor is I (x=0,z=0), X (1,0), Z (0,1) or Y (1,1). Qubit 0 is the least
/// significant bit of a basis index.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_identity() const { return x == 0 && z == 0; }
  /// Number of Y factors; P = i^{ny} X^x Z^z as an operator product.
  int y_count() const { return std::popcount(x & z); }
  int weight() const { return std::popcount(x | z); }

  /// Word such as "XZYI": character k acts on qubit k.
  std::string word(int n_qubits) const;
  static PauliString from_word(const std::string& word);
  static PauliString single(int qubit, char pauli);

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
};

/// a * b = i^phase * string, phase in {0, 1, 2, 3}.
struct PauliProduct {
  PauliString string;
  int phase = 0;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);

/// i^k for integer k.
Complex i_power(int k);

/// Whether the two strings commute.
bool commute(const PauliString& a, const PauliString& b);

/// General (not necessarily Hermitian) linear combination of Pauli strings.
/// Used as the algebra for building qubit operators from fermionic ones.
class PauliOperator {
 public:
  using TermMap = std::map<PauliString, Complex>;

  PauliOperator() = default;
  explicit PauliOperator(int n_qubits) : n_qubits_(n_qubits) {}
  static PauliOperator identity(int n_qubits, Complex c = 1.0);
  static PauliOperator term(int n_qubits, const PauliString& p, Complex c = 1.0);

  int n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add(const PauliString& p, Complex c);
  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(Complex c);
  friend PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
  friend PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }
  friend PauliOperator operator*(PauliOperator a, Complex c) { return a *= c; }
  friend PauliOperator operator*(Complex c, PauliOperator a) { return a *= c; }
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

  PauliOperator adjoint() const;
  /// Drop terms with |c| <= tol.
  void prune(double tol);

 private:
  int n_qubits_ = 0;
  TermMap terms_;
};

}  // namespace vqsm::qubit
