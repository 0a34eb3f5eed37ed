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

#include "vqsm/qubit/pauli.hpp"

#include <cmath>

namespace vqsm::qubit {

std::string PauliString::word(int n_qubits) const {
  std::string w(static_cast<std::size_t>(n_qubits), 'I');
  for (int k = 0; k < n_qubits; ++k) {
    const bool xb = (x >> k) & 1u;
    const bool zb = (z >> k) & 1u;
    w[k] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return w;
}

PauliString PauliString::from_word(const std::string& word) {
  if (word.size() > 64) throw DomainError("Pauli word longer than 64 qubits");
  PauliString p;
  for (std::size_t k = 0; k < word.size(); ++k) p = multiply(p, single(static_cast<int>(k), word[k])).string;
  return p;
}

PauliString PauliString::single(int qubit, char pauli) {
  if (qubit < 0 || qubit >= 64) throw DomainError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (pauli) {
    case 'I': return {};
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    case 'Z': return {0, bit};
    default: throw DomainError(std::string("unknown Pauli letter '") + pauli + "'");
  }
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  // a = i^{ya} X^xa Z^za, b = i^{yb} X^xb Z^zb; moving Z^za past X^xb gives
  // (-1)^{|za & xb|}. The result is re-expressed against its own Y count.
  PauliProduct out;
  out.string = {a.x ^ b.x, a.z ^ b.z};
  const int phase = a.y_count() + b.y_count() - out.string.y_count() +
                    2 * std::popcount(a.z & b.x);
  out.phase = ((phase % 4) + 4) % 4;
  return out;
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

bool commute(const PauliString& a, const PauliString& b) {
  return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) % 2 == 0;
}

PauliOperator PauliOperator::identity(int n_qubits, Complex c) {
  return term(n_qubits, PauliString{}, c);
}

PauliOperator PauliOperator::term(int n_qubits, const PauliString& p, Complex c) {
  PauliOperator op(n_qubits);
  op.add(p, c);
  return op;
}

void PauliOperator::add(const PauliString& p, Complex c) {
  if (c == Complex{}) return;
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  n_qubits_ = std::max(n_qubits_, o.n_qubits_);
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) {
  n_qubits_ = std::max(n_qubits_, o.n_qubits_);
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PauliOperator& PauliOperator::operator*=(Complex c) {
  if (c == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator out(std::max(a.n_qubits_, b.n_qubits_));
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      const auto prod = multiply(pa, pb);
      out.add(prod.string, ca * cb * i_power(prod.phase));
    }
  }
  return out;
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator out(n_qubits_);
  for (const auto& [p, c] : terms_) out.add(p, std::conj(c));
  return out;
}

void PauliOperator::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

}  // namespace vqsm::qubit
