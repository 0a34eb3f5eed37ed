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

#include "vqsm/qubit/determinant.hpp"

#include <bit>

namespace vqsm::qubit {

namespace {
std::uint64_t low_mask(int n) { return n >= 64 ? ~0ull : ((std::uint64_t{1} << n) - 1); }
}  // namespace

int Determinant::n_alpha() const { return std::popcount(bits & low_mask(n_qubits / 2)); }

int Determinant::n_beta() const { return std::popcount(bits >> (n_qubits / 2)); }

Determinant Determinant::aufbau(int n_orb, int n_alpha, int n_beta) {
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_orb || n_beta > n_orb) {
    throw DomainError("occupation exceeds orbital count");
  }
  std::vector<int> a, b;
  for (int i = 0; i < n_alpha; ++i) a.push_back(i);
  for (int i = 0; i < n_beta; ++i) b.push_back(i);
  return from_occupations(n_orb, a, b);
}

Determinant Determinant::from_occupations(int n_orb, const std::vector<int>& alpha,
                                          const std::vector<int>& beta) {
  Determinant d;
  d.n_qubits = 2 * n_orb;
  for (int i : alpha) {
    if (i < 0 || i >= n_orb) throw DomainError("alpha orbital out of range");
    d.bits |= std::uint64_t{1} << i;
  }
  for (int i : beta) {
    if (i < 0 || i >= n_orb) throw DomainError("beta orbital out of range");
    d.bits |= std::uint64_t{1} << (n_orb + i);
  }
  return d;
}

std::vector<std::uint64_t> sector_projector(int n_elec, int sz2, int n_qubits) {
  std::vector<std::uint64_t> out;
  if ((n_elec + sz2) % 2 != 0 || n_qubits % 2 != 0) return out;
  const int na = (n_elec + sz2) / 2;
  const int nb = (n_elec - sz2) / 2;
  const int n_orb = n_qubits / 2;
  if (na < 0 || nb < 0 || na > n_orb || nb > n_orb) return out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (std::popcount(i & low_mask(n_orb)) == na && std::popcount(i >> n_orb) == nb) {
      out.push_back(i);
    }
  }
  return out;
}

Sector sector_of(const Determinant& d) { return {d.n_electrons(), d.ms2()}; }

}  // namespace vqsm::qubit
