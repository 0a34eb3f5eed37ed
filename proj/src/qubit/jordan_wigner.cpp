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

#include "vqsm/qubit/jordan_wigner.hpp"

#include <cmath>

namespace vqsm::qubit {

namespace {

PauliOperator ladder(int p, int n_qubits, bool create) {
  if (p < 0 || p >= n_qubits) throw DomainError("spin-orbital index out of range");
  std::uint64_t zmask = (std::uint64_t{1} << p) - 1;
  const std::uint64_t bit = std::uint64_t{1} << p;
  PauliOperator op(n_qubits);
  // X_p Z_<p and Y_p Z_<p
  op.add(PauliString{bit, zmask}, 0.5);
  op.add(PauliString{bit, zmask | bit}, create ? Complex(0.0, -0.5) : Complex(0.0, 0.5));
  return op;
}

PauliOperator number(int p, int n_qubits) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  PauliOperator op = PauliOperator::identity(n_qubits, 0.5);
  op.add(PauliString{0, bit}, -0.5);
  return op;
}

}  // namespace

PauliOperator creation(int p, int n_qubits) { return ladder(p, n_qubits, true); }
PauliOperator annihilation(int p, int n_qubits) { return ladder(p, n_qubits, false); }

QubitHamiltonian jordan_wigner(const chem::MOIntegrals& mo) {
  mo.validate();
  const int n = mo.n_orb;
  const int nq = 2 * n;
  std::vector<PauliOperator> cr, an;
  for (int p = 0; p < nq; ++p) {
    cr.push_back(creation(p, nq));
    an.push_back(annihilation(p, nq));
  }
  const auto spatial = [n](int p) { return p % n; };
  const auto spin = [n](int p) { return p / n; };

  PauliOperator op = PauliOperator::identity(nq, mo.e_nuc);
  for (int p = 0; p < nq; ++p)
    for (int q = 0; q < nq; ++q) {
      if (spin(p) != spin(q)) continue;
      const double v = mo.h(spatial(p), spatial(q));
      if (v == 0.0) continue;
      op += (cr[p] * an[q]) * Complex(v);
    }

  // 1/2 (pq|rs) a+_p a+_r a_s a_q; pairs (p,q) and (r,s) share a spin.
  for (int p = 0; p < nq; ++p)
    for (int r = 0; r < nq; ++r) {
      if (p == r) continue;
      const PauliOperator pr = cr[p] * cr[r];
      for (int s = 0; s < nq; ++s) {
        if (spin(r) != spin(s)) continue;
        const PauliOperator prs = pr * an[s];
        for (int q = 0; q < nq; ++q) {
          if (spin(p) != spin(q) || q == s) continue;
          const double v = mo.g(spatial(p), spatial(q), spatial(r), spatial(s));
          if (v == 0.0) continue;
          op += (prs * an[q]) * Complex(0.5 * v);
        }
      }
    }
  op.prune(QubitHamiltonian::kPruneTolerance);
  return QubitHamiltonian::from_operator(op);
}

QubitHamiltonian number_operator(int n_orb) {
  PauliOperator op(2 * n_orb);
  for (int p = 0; p < 2 * n_orb; ++p) op += number(p, 2 * n_orb);
  return QubitHamiltonian::from_operator(op);
}

QubitHamiltonian sz_operator(int n_orb) {
  const int nq = 2 * n_orb;
  PauliOperator op(nq);
  for (int i = 0; i < n_orb; ++i) {
    op += number(spin_orbital(i, false, n_orb), nq) * Complex(0.5);
    op -= number(spin_orbital(i, true, n_orb), nq) * Complex(0.5);
  }
  op.prune(0.0);
  return QubitHamiltonian::from_operator(op);
}

QubitHamiltonian s_squared_operator(int n_orb) {
  const int nq = 2 * n_orb;
  PauliOperator s_plus(nq), s_minus(nq);
  for (int i = 0; i < n_orb; ++i) {
    const int a = spin_orbital(i, false, n_orb);
    const int b = spin_orbital(i, true, n_orb);
    s_plus += creation(a, nq) * annihilation(b, nq);
    s_minus += creation(b, nq) * annihilation(a, nq);
  }
  const PauliOperator sz = sz_operator(n_orb).to_operator();
  PauliOperator op = s_minus * s_plus + sz * sz + sz;
  op.prune(1e-14);
  return QubitHamiltonian::from_operator(op);
}

}  // namespace vqsm::qubit
