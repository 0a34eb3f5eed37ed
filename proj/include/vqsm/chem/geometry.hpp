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

#include <vector>

#include <nlohmann/json.hpp>

#include "vqsm/common.hpp"

namespace vqsm::chem {

/// Hydrogen-only molecular geometry. Coordinates are in Ångström.
struct Geometry {
  std::vector<Vec3> atoms;
  int net_charge = 0;
  int n_alpha = 0;
  int n_beta = 0;

  int n_atoms() const { return static_cast<int>(atoms.size()); }
  int n_electrons() const { return n_alpha + n_beta; }
  /// Twice the spin projection, n_alpha - n_beta.
  int ms2() const { return n_alpha - n_beta; }

  /// Throws GeometryError when atoms coincide or electron counts are
  /// inconsistent with the charge.
  void validate() const;

  nlohmann::json to_json() const;
  static Geometry from_json(const nlohmann::json& j);
};

/// Builds a geometry with the given charge and spin projection (ms2 = Na - Nb).
Geometry make_geometry(std::vector<Vec3> atoms, int charge, int ms2);

/// Collinear chain along z with nearest-neighbour spacing `d` Å.
Geometry linear_chain(int n_atoms, double d, int charge = 0, int ms2 = 0);

/// Regular polygon in the xy plane with edge length `d` Å.
Geometry regular_ring(int n_atoms, double d, int charge = 0, int ms2 = 0);

}  // namespace vqsm::chem
