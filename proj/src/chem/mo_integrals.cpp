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

#include "vqsm/chem/mo_integrals.hpp"

#include <vector>

namespace vqsm::chem {

void MOIntegrals::validate() const {
  if (n_orb <= 0 || h.rows() != n_orb || h.cols() != n_orb || g.n() != n_orb) {
    throw PreconditionError("MO integral dimensions are inconsistent");
  }
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw PreconditionError("one-electron MO matrix is not symmetric");
  }
  if (n_elec < 0 || n_elec > 2 * n_orb || (n_elec + ms2) % 2 != 0 ||
      std::abs(ms2) > n_elec) {
    throw PreconditionError("electron count incompatible with orbital space");
  }
}

MOIntegrals transform_to_mo(const IntegralSet& ints, const RMatrix& c) {
  const int n = ints.n_orb();
  if (c.rows() != n || c.cols() != n) throw PreconditionError("C has wrong shape");
  const RMatrix ortho = c.transpose() * ints.overlap * c;
  if ((ortho - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8) {
    throw PreconditionError("C is not orthonormal with respect to S");
  }

  MOIntegrals mo;
  mo.n_orb = n;
  mo.e_nuc = ints.e_nuc;
  mo.h = c.transpose() * ints.core_hamiltonian() * c;
  mo.h = 0.5 * (mo.h + mo.h.transpose()).eval();

  // Quarter transforms over a dense n^4 scratch array.
  const auto idx = [n](int a, int b, int cc, int d) {
    return ((static_cast<std::size_t>(a) * n + b) * n + cc) * n + d;
  };
  std::vector<double> t0(static_cast<std::size_t>(n) * n * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) t0[idx(p, q, r, s)] = ints.eri(p, q, r, s);

  std::vector<double> t1(t0.size(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) t1[idx(i, q, r, s)] += c(p, i) * t0[idx(p, q, r, s)];
  std::fill(t0.begin(), t0.end(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) t0[idx(i, j, r, s)] += c(q, j) * t1[idx(i, q, r, s)];
  std::fill(t1.begin(), t1.end(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r)
          for (int s = 0; s < n; ++s) t1[idx(i, j, k, s)] += c(r, k) * t0[idx(i, j, r, s)];
  std::fill(t0.begin(), t0.end(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int s = 0; s < n; ++s) t0[idx(i, j, k, l)] += c(s, l) * t1[idx(i, j, k, s)];

  mo.g = EriTensor(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) mo.g.set(i, j, k, l, t0[idx(i, j, k, l)]);
  return mo;
}

}  // namespace vqsm::chem
