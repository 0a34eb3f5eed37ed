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

#include "vqsm/oracles/fci.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "vqsm/qubit/jordan_wigner.hpp"

namespace vqsm::oracles {

SpectrumSlice fci_solve(const qubit::QubitHamiltonian& h, const qubit::Sector& sector,
                        const FciOptions& opts) {
  const auto indices = qubit::sector_projector(sector.n_elec, sector.sz2, h.n_qubits());
  if (indices.empty()) throw DomainError("sector is empty for this register");
  if (indices.size() > opts.max_dimension) throw CapacityError("sector dimension exceeds FCI cap");

  const CMatrix hs = h.restricted_matrix(indices);
  CMatrix basis = CMatrix::Identity(hs.rows(), hs.cols());
  if (opts.s_squared) {
    if (h.n_qubits() % 2 != 0) throw DomainError("spin filter needs an even register");
    const auto s2 = qubit::s_squared_operator(h.n_qubits() / 2).restricted_matrix(indices);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s2);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      if (std::abs(es.eigenvalues()[k] - *opts.s_squared) < 1e-6) keep.push_back(k);
    }
    if (keep.empty()) throw DomainError("no states with the requested S^2 in this sector");
    basis.resize(hs.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
  }
  const CMatrix hp = basis.adjoint() * hs * basis;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (hp + hp.adjoint()));

  SpectrumSlice out;
  out.sector = sector;
  out.eigenvalues = es.eigenvalues();
  out.e0 = out.eigenvalues[0];
  out.e1 = out.eigenvalues.size() > 1 ? out.eigenvalues[1] : out.e0;
  const CVector local = basis * es.eigenvectors().col(0);
  CVector full = CVector::Zero(static_cast<Eigen::Index>(h.dim()));
  for (std::size_t a = 0; a < indices.size(); ++a) full[static_cast<Eigen::Index>(indices[a])] = local[static_cast<Eigen::Index>(a)];
  // Fix the global phase: largest component real and positive.
  Eigen::Index imax = 0;
  full.cwiseAbs().maxCoeff(&imax);
  full *= std::conj(full[imax]) / std::abs(full[imax]);
  out.ground_vector = circuit::StateVector(h.n_qubits(), std::move(full));
  return out;
}

double full_space_ground_energy(const qubit::QubitHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h.dense_matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

std::vector<double> power_ratio_curve(const SpectrumSlice& slice, int n_max) {
  if (!(slice.e0 < 0.0)) throw DomainError("power ratio needs a negative ground energy");
  std::vector<double> out;
  const double ratio = slice.e1 / slice.e0;
  double value = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    value *= ratio;
    out.push_back(value);
  }
  return out;
}

}  // namespace vqsm::oracles
