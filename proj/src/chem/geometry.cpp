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

#include "vqsm/chem/geometry.hpp"

#include <cmath>
#include <numbers>

namespace vqsm::chem {

void Geometry::validate() const {
  if (atoms.empty()) throw GeometryError("geometry has no atoms");
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t b = a + 1; b < atoms.size(); ++b) {
      if ((atoms[a] - atoms[b]).norm() <= 1e-6) {
        throw GeometryError("atoms " + std::to_string(a) + " and " +
                            std::to_string(b) + " coincide");
      }
    }
  }
  if (n_beta < 0 || n_alpha < n_beta) {
    throw GeometryError("electron counts must satisfy n_alpha >= n_beta >= 0");
  }
  if (n_alpha + n_beta != n_atoms() - net_charge) {
    throw GeometryError("n_alpha + n_beta does not match atoms minus charge");
  }
}

nlohmann::json Geometry::to_json() const {
  nlohmann::json j;
  j["atoms"] = nlohmann::json::array();
  for (const auto& a : atoms) j["atoms"].push_back({a.x(), a.y(), a.z()});
  j["charge"] = net_charge;
  j["n_alpha"] = n_alpha;
  j["n_beta"] = n_beta;
  return j;
}

Geometry Geometry::from_json(const nlohmann::json& j) {
  Geometry g;
  try {
    for (const auto& a : j.at("atoms")) {
      if (a.size() != 3) throw GeometryError("atom coordinates need 3 entries");
      g.atoms.emplace_back(a[0].get<double>(), a[1].get<double>(),
                           a[2].get<double>());
    }
    g.net_charge = j.value("charge", 0);
    const int n_elec = static_cast<int>(g.atoms.size()) - g.net_charge;
    g.n_alpha = j.value("n_alpha", (n_elec + 1) / 2);
    g.n_beta = j.value("n_beta", n_elec / 2);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("bad geometry json: ") + e.what());
  }
  g.validate();
  return g;
}

Geometry make_geometry(std::vector<Vec3> atoms, int charge, int ms2) {
  Geometry g;
  g.atoms = std::move(atoms);
  g.net_charge = charge;
  const int n_elec = g.n_atoms() - charge;
  if (n_elec < 0 || (n_elec + ms2) % 2 != 0 || std::abs(ms2) > n_elec) {
    throw GeometryError("incompatible charge and spin projection");
  }
  g.n_alpha = (n_elec + ms2) / 2;
  g.n_beta = (n_elec - ms2) / 2;
  g.validate();
  return g;
}

Geometry linear_chain(int n_atoms, double d, int charge, int ms2) {
  if (n_atoms < 1 || !(d > 0.0)) throw GeometryError("chain needs n >= 1, d > 0");
  std::vector<Vec3> atoms;
  for (int i = 0; i < n_atoms; ++i) atoms.emplace_back(0.0, 0.0, i * d);
  return make_geometry(std::move(atoms), charge, ms2);
}

Geometry regular_ring(int n_atoms, double d, int charge, int ms2) {
  if (n_atoms < 3 || !(d > 0.0)) throw GeometryError("ring needs n >= 3, d > 0");
  const double radius = d / (2.0 * std::sin(std::numbers::pi / n_atoms));
  std::vector<Vec3> atoms;
  for (int i = 0; i < n_atoms; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / n_atoms;
    atoms.emplace_back(radius * std::cos(phi), radius * std::sin(phi), 0.0);
  }
  return make_geometry(std::move(atoms), charge, ms2);
}

}  // namespace vqsm::chem
