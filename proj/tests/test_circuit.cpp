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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "vqsm/circuit/hea.hpp"
#include "vqsm/circuit/state_vector.hpp"
#include "vqsm/engine/problem.hpp"

using namespace vqsm;
using namespace vqsm::circuit;

namespace {

StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  CVector a(1 << n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a[i] = {nd(rng), nd(rng)};
  StateVector s(n, a);
  s.normalize();
  return s;
}

std::vector<double> random_params(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> p(count);
  for (auto& x : p) x = u(rng);
  return p;
}

}  // namespace

TEST(Gates, RyIdentityAndFlip) {
  StateVector s(1);
  apply_ry(s, 0, 0.0);
  EXPECT_EQ(s[0], Complex(1.0));
  apply_ry(s, 0, M_PI);
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
}

TEST(Gates, CnotLeastSignificantControl) {
  auto s = StateVector::basis_state(2, 0b01);
  apply_cnot(s, 0, 1);
  EXPECT_EQ(s[0b11], Complex(1.0));
  EXPECT_THROW(apply_cnot(s, 1, 1), DomainError);
  EXPECT_THROW(apply_ry(s, 2, 0.1), DomainError);
}

TEST(Gates, Unitarity) {
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_state(5, trial);
    apply_ry(s, trial % 5, 0.7 * trial);
    apply_cnot(s, trial % 5, (trial + 2) % 5);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
  }
}

TEST(Hea, ZeroParametersGiveVacuum) {
  HeaCircuit c{4, 2, Entangler::Linear, std::vector<double>(12, 0.0), std::nullopt};
  const auto s = run_hea(c);
  EXPECT_EQ(s[0], Complex(1.0));
}

TEST(Hea, TwoQubitEntanglingCheck) {
  HeaCircuit c{2, 1, Entangler::Linear, {M_PI, 0.0, 0.0, 0.0}, std::nullopt};
  EXPECT_NEAR(std::abs(run_hea(c)[0b11]), 1.0, 1e-14);
}

TEST(Hea, ShapeAndCounts) {
  EXPECT_EQ(HeaCircuit::param_count(8, 1), 16);
  EXPECT_EQ(HeaCircuit::cnot_count(8, 1, Entangler::Linear), 7);
  EXPECT_EQ(HeaCircuit::cnot_count(12, 1, Entangler::Linear), 11);
  EXPECT_EQ(HeaCircuit::cnot_count(8, 2, Entangler::AllToAll), 56);
  HeaCircuit bad{4, 1, Entangler::Linear, std::vector<double>(3, 0.0), std::nullopt};
  EXPECT_THROW(run_hea(bad), DomainError);
}

TEST(Hea, NormalizedAndDeterministic) {
  HeaCircuit c{8, 1, Entangler::Linear, random_params(16, 1), std::nullopt};
  const auto a = run_hea(c), b = run_hea(c);
  EXPECT_NEAR(a.norm(), 1.0, 1e-10);
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
  HeaCircuit full{5, 2, Entangler::AllToAll, random_params(15, 2), std::nullopt};
  EXPECT_NEAR(run_hea(full).norm(), 1.0, 1e-10);
}

TEST(Hea, ParameterShiftRule) {
  const auto p = engine::build_problem(chem::linear_chain(2, 0.9));
  HeaCircuit c{4, 2, Entangler::Linear, random_params(12, 7), std::nullopt};
  auto energy = [&](const std::vector<double>& th) {
    HeaCircuit cc = c;
    cc.params = th;
    return expectation(run_hea(cc), p.h);
  };
  for (int k = 0; k < 12; ++k) {
    auto plus = c.params, minus = c.params, hp = c.params, hm = c.params;
    plus[k] += M_PI / 2;
    minus[k] -= M_PI / 2;
    hp[k] += 1e-5;
    hm[k] -= 1e-5;
    const double shift = 0.5 * (energy(plus) - energy(minus));
    const double fd = (energy(hp) - energy(hm)) / 2e-5;
    EXPECT_NEAR(shift, fd, 1e-6) << "param " << k;
  }
}

TEST(MatrixElements, MatchDenseSandwich) {
  const auto p = engine::build_problem(chem::linear_chain(2, 1.1));
  const auto psi = random_state(4, 3), phi = random_state(4, 4);
  const CMatrix d = p.h.dense_matrix();
  const Complex ref = psi.amplitudes().dot(d * phi.amplitudes());
  EXPECT_NEAR(std::abs(matrix_element(psi, p.h, phi) - ref), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(overlap(psi, psi) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(matrix_element(psi, p.h, psi).imag(), 0.0, 1e-10);
  qubit::QubitHamiltonian id(4, 1.0);
  EXPECT_NEAR(std::abs(matrix_element(psi, id, phi) - overlap(psi, phi)), 0.0, 1e-14);
  EXPECT_THROW(overlap(psi, random_state(3, 1)), PreconditionError);
}

TEST(Resources, FormulasAndAssumptions) {
  const auto r = estimate_resources(8, 1, Entangler::Linear);
  EXPECT_EQ(r.params, 16);
  EXPECT_EQ(r.cnot_native, 7);
  EXPECT_EQ(r.cnot_hadamard_test, 2 * (2 * 16 + 6 * 7));
  EXPECT_GE(r.cnot_hadamard_test, r.cnot_native);
  EXPECT_EQ(estimate_resources(12, 1, Entangler::Linear).cnot_native, 11);
  const auto z = estimate_resources(8, 0, Entangler::Linear);
  EXPECT_EQ(z.cnot_native, 0);
  EXPECT_EQ(z.params, 8);
  ResourceModel m;
  m.cnots_per_toffoli = 4;
  EXPECT_EQ(estimate_resources(8, 1, Entangler::Linear, m).cnot_hadamard_test, 2 * (32 + 28));
}
