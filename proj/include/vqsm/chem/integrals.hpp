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

#include <array>
#include <vector>

#include "vqsm/chem/geometry.hpp"
#include "vqsm/common.hpp"

namespace vqsm::chem {

/// Boys function of order zero, F0(x) = ∫₀¹ exp(-x t²) dt.
double boys_f0(double x);

/// Three-primitive contracted s shell. Center in Bohr; primitive
/// normalization is folded into the coefficients.
struct ContractedShell {
  Vec3 center = Vec3::Zero();
  std::array<double, 3> exponents{};
  std::array<double, 3> coefficients{};
};

/// STO-3G hydrogen 1s shell centered at `center_bohr`.
ContractedShell sto3g_hydrogen(const Vec3& center_bohr);

/// Two-electron integrals (ij|kl) with 8-fold permutational symmetry.
/// Only the canonical quadruple is stored, so the symmetry holds exactly.
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(int n);

  int n() const { return n_; }
  double operator()(int i, int j, int k, int l) const {
    return data_[index(i, j, k, l)];
  }
  void set(int i, int j, int k, int l, double v) { data_[index(i, j, k, l)] = v; }

  /// Canonical storage slot; all 8 equivalent quadruples share it.
  std::size_t index(int i, int j, int k, int l) const {
    const std::size_t ij = pair(i, j);
    const std::size_t kl = pair(k, l);
    return pair_index(ij, kl);
  }
  std::size_t size() const { return data_.size(); }

 private:
  static std::size_t pair(int a, int b) {
    const std::size_t hi = a > b ? a : b;
    const std::size_t lo = a > b ? b : a;
    return hi * (hi + 1) / 2 + lo;
  }
  static std::size_t pair_index(std::size_t a, std::size_t b) {
    return a > b ? a * (a + 1) / 2 + b : b * (b + 1) / 2 + a;
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// Atomic-orbital integrals in atomic units.
struct IntegralSet {
  RMatrix overlap;
  RMatrix kinetic;
  RMatrix nuclear;
  EriTensor eri;
  double e_nuc = 0.0;

  int n_orb() const { return static_cast<int>(overlap.rows()); }
  RMatrix core_hamiltonian() const { return kinetic + nuclear; }
};

std::vector<ContractedShell> build_basis(const Geometry& geom);

/// Closed-form s-type Gaussian integrals for every shell pair/quartet.
IntegralSet build_integrals(const Geometry& geom);

double overlap_integral(const ContractedShell& a, const ContractedShell& b);

}  // namespace vqsm::chem
