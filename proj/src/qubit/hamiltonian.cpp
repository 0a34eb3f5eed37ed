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

#include "vqsm/qubit/hamiltonian.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace vqsm::qubit {

QubitHamiltonian::QubitHamiltonian(int n_qubits, double constant)
    : n_qubits_(n_qubits), constant_(constant) {
  if (n_qubits < 0 || n_qubits > 30) throw DomainError("unsupported qubit count");
}

QubitHamiltonian QubitHamiltonian::from_operator(const PauliOperator& op, double hermitian_tol) {
  QubitHamiltonian h(op.n_qubits());
  for (const auto& [p, c] : op.terms()) {
    if (std::abs(c.imag()) > hermitian_tol) {
      throw DomainError("operator is not Hermitian: term " + p.word(op.n_qubits()) +
                        " has imaginary coefficient");
    }
    h.add_term(p, c.real());
  }
  return h;
}

void QubitHamiltonian::add_term(const PauliString& p, double c) {
  const std::uint64_t limit = n_qubits_ >= 64 ? ~0ull : ((std::uint64_t{1} << n_qubits_) - 1);
  if ((p.x | p.z) & ~limit) throw DomainError("Pauli string exceeds qubit count");
  if (p.is_identity()) {
    constant_ += c;
    return;
  }
  auto [it, fresh] = terms_.try_emplace(p, c);
  if (!fresh) it->second += c;
  if (std::abs(it->second) <= kPruneTolerance) terms_.erase(it);
}

PauliOperator QubitHamiltonian::to_operator() const {
  PauliOperator op = PauliOperator::identity(n_qubits_, constant_);
  for (const auto& [p, c] : terms_) op.add(p, c);
  return op;
}

std::vector<kernels::PauliTerm> QubitHamiltonian::kernel_terms() const {
  std::vector<kernels::PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [p, c] : terms_) out.push_back({p.x, p.z, c * i_power(p.y_count())});
  return out;
}

void QubitHamiltonian::apply(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != dim() || out.size() != dim()) throw PreconditionError("state dimension mismatch");
  const auto terms = kernel_terms();
  kernels::apply_pauli_terms(terms, in, out);
  if (constant_ != 0.0) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] += constant_ * in[i];
  }
}

CVector QubitHamiltonian::apply(const CVector& in) const {
  CVector out(in.size());
  apply(std::span<const Complex>(in.data(), in.size()), std::span<Complex>(out.data(), out.size()));
  return out;
}

kernels::CsrMatrix QubitHamiltonian::to_csr() const {
  const auto terms = kernel_terms();
  return kernels::build_csr(terms, constant_, dim());
}

CMatrix QubitHamiltonian::dense_matrix() const {
  if (n_qubits_ > kMaxDenseQubits) throw CapacityError("dense matrix capped at 14 qubits");
  const std::size_t d = dim();
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  const auto csr = to_csr();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = csr.row_ptr[i]; k < csr.row_ptr[i + 1]; ++k)
      m(static_cast<Eigen::Index>(i), csr.col[k]) = csr.val[k];
  return m;
}

CMatrix QubitHamiltonian::restricted_matrix(const std::vector<std::uint64_t>& indices) const {
  const auto terms = kernel_terms();
  std::map<std::uint64_t, Eigen::Index> position;
  for (std::size_t a = 0; a < indices.size(); ++a) position[indices[a]] = static_cast<Eigen::Index>(a);
  const auto n = static_cast<Eigen::Index>(indices.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const std::uint64_t i = indices[a];
    m(a, a) += constant_;
    for (const auto& t : terms) {
      const std::uint64_t j = i ^ t.x;
      const auto it = position.find(j);
      if (it == position.end()) continue;
      const double sign = (std::popcount(t.z & j) & 1) ? -1.0 : 1.0;
      m(a, it->second) += t.coeff * sign;
    }
  }
  return m;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  PauliOperator c = a * b - b * a;
  c.prune(0.0);
  return c;
}

std::string write_pauli_list(const QubitHamiltonian& h) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", h.constant());
  out << buf << ' ' << PauliString{}.word(h.n_qubits()) << '\n';
  for (const auto& [p, c] : h.terms()) {
    std::snprintf(buf, sizeof buf, "%.17g", c);
    out << buf << ' ' << p.word(h.n_qubits()) << '\n';
  }
  return out.str();
}

QubitHamiltonian parse_pauli_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n_qubits = -1;
  QubitHamiltonian h;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coeff_tok, word;
    if (!(ls >> coeff_tok)) continue;
    if (!(ls >> word)) throw ParseError("expected 'coeff WORD'", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing tokens", lineno);
    double c = 0.0;
    try {
      std::size_t used = 0;
      c = std::stod(coeff_tok, &used);
      if (used != coeff_tok.size()) throw std::invalid_argument("partial");
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + coeff_tok + "'", lineno);
    }
    if (n_qubits < 0) {
      n_qubits = static_cast<int>(word.size());
      h = QubitHamiltonian(n_qubits);
    } else if (static_cast<int>(word.size()) != n_qubits) {
      throw ParseError("Pauli word length differs from earlier lines", lineno);
    }
    try {
      h.add_term(PauliString::from_word(word), c);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (n_qubits < 0) throw ParseError("empty Pauli list", lineno);
  return h;
}

QubitHamiltonian parse_pauli_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_pauli_list(in);
}

}  // namespace vqsm::qubit
