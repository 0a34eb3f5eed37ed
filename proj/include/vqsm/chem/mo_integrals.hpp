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

#include "vqsm/chem/integrals.hpp"

namespace vqsm::chem {

/// Molecular-orbital Hamiltonian data. `g` is in chemists' notation (ij|kl).
struct MOIntegrals {
  RMatrix h;
  EriTensor g;
  double e_nuc = 0.0;
  int n_orb = 0;
  int n_elec = 0;
  int ms2 = 0;

  /// Throws PreconditionError on inconsistent dimensions or asymmetric h.
  void validate() const;
};

/// h = C^T (T + V) C and the four-index transform of the AO repulsion
/// integrals. C must be orthonormal with respect to the AO overlap.
MOIntegrals transform_to_mo(const IntegralSet& ints, const RMatrix& c);

}  // namespace vqsm::chem
