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

#include "vqsm/engine/problem.hpp"

#include "vqsm/chem/integrals.hpp"
#include "vqsm/chem/scf.hpp"
#include "vqsm/circuit/state_vector.hpp"
#include "vqsm/qubit/jordan_wigner.hpp"

namespace vqsm::engine {

int scf_reference_electrons(const chem::Geometry& g) {
  if (g.n_alpha == g.n_beta) return g.n_electrons();
  if (g.n_atoms() % 2 == 0) return g.n_atoms();
  return g.n_electrons() + 1;
}

namespace {

void finish(Problem& p) {
  p.h = qubit::jordan_wigner(p.mo);
  p.e_guess = circuit::expectation(circuit::determinant_state(p.guess), p.h);
}

}  // namespace

Problem build_problem(const chem::Geometry& g, const chem::ScfConfig& scf) {
  g.validate();
  const auto ints = chem::build_integrals(g);
  Problem p;
  p.scf_electrons = scf_reference_electrons(g);
  const auto res = chem::rhf_scf(ints, p.scf_electrons, scf);
  p.e_scf = res.energy;
  p.mo = chem::transform_to_mo(ints, res.coefficients);
  p.mo.n_elec = g.n_electrons();
  p.mo.ms2 = g.ms2();
  p.guess = qubit::Determinant::aufbau(p.mo.n_orb, g.n_alpha, g.n_beta);
  finish(p);
  return p;
}

Problem problem_from_mo(const chem::MOIntegrals& mo) {
  mo.validate();
  if ((mo.n_elec + mo.ms2) % 2 != 0 || mo.ms2 < 0 || mo.ms2 > mo.n_elec) {
    throw DomainError("NELEC and MS2 are inconsistent");
  }
  Problem p;
  p.mo = mo;
  const int na = (mo.n_elec + mo.ms2) / 2;
  const int nb = mo.n_elec - na;
  p.guess = qubit::Determinant::aufbau(mo.n_orb, na, nb);
  p.scf_electrons = mo.n_elec;
  finish(p);
  p.e_scf = p.e_guess;
  return p;
}

oracles::SpectrumSlice solve_fci(const Problem& p, const oracles::FciOptions& opts) {
  return oracles::fci_solve(p.h, p.sector(), opts);
}

}  // namespace vqsm::engine
