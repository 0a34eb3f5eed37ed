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

#include <random>

#include <gtest/gtest.h>

#include "vqsm/cost/two_level.hpp"
#include "vqsm/engine/problem.hpp"
#include "vqsm/oracles/fci.hpp"
#include "vqsm/oracles/reflection.hpp"
#include "vqsm/oracles/tridiagonal.hpp"
#include "vqsm/qubit/jordan_wigner.hpp"

using namespace vqsm;
using namespace vqsm::oracles;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& rng, bool real = false) {
  std::normal_distribution<double> nd;
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {nd(rng), real ? 0.0 : nd(rng)};
  return 0.5 * (m + m.adjoint());
}

CVector random_unit(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = {nd(rng), nd(rng)};
  return v / v.norm();
}

}  // namespace

TEST(Tridiagonal, LanczosAgreesWithHouseholderOnRandomMatrices) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const CMatrix h = random_hermitian(n, rng, trial % 2 == 0);
    const CVector v0 = random_unit(n, rng);
    const auto lz = lanczos(h, v0, n);
    const auto hh = householder_tridiag(h, v0);
    ASSERT_EQ(hh.size(), static_cast<std::size_t>(n));
    ASSERT_EQ(lz.size(), static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < lz.size(); ++k) EXPECT_NEAR(lz.alpha[k], hh.alpha[k], 1e-8);
    for (std::size_t k = 0; k < lz.beta.size(); ++k) EXPECT_NEAR(lz.beta[k], hh.beta[k], 1e-8);
  }
}

TEST(Tridiagonal, HouseholderBasisReducesTheMatrix) {
  std::mt19937_64 rng(22);
  const CMatrix h = random_hermitian(12, rng);
  const CVector v0 = random_unit(12, rng);
  const auto t = householder_tridiag(h, v0);
  CMatrix q(12, 12);
  for (int k = 0; k < 12; ++k) q.col(k) = t.basis[k];
  EXPECT_TRUE((q.adjoint() * q).isIdentity(1e-12));
  EXPECT_NEAR(std::abs(q.col(0).dot(v0)), 1.0, 1e-12);
  const CMatrix red = q.adjoint() * h * q;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      if (std::abs(i - j) > 1) { EXPECT_LT(std::abs(red(i, j)), 1e-10); }
      if (i == j) { EXPECT_NEAR(red(i, i).real(), t.alpha[i], 1e-10); }
      if (i == j + 1) { EXPECT_NEAR(std::abs(red(i, j)), t.beta[j], 1e-10); }
    }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  EXPECT_NEAR(t.ground_energy(12), es.eigenvalues()[0], 1e-10);
}

TEST(Tridiagonal, LanczosStopsOnInvariantSubspace) {
  CMatrix h = CMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) h(i, i) = i;
  CVector v0 = CVector::Zero(6);
  v0[0] = v0[1] = std::sqrt(0.5);
  const auto t = lanczos(h, v0, 6);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_NEAR(t.ground_energy(2), 0.0, 1e-12);
  EXPECT_THROW(lanczos(h, 2.0 * v0, 3), PreconditionError);
}

TEST(Fci, SectorSolveMatchesDenseDiagonalization) {
  const auto p = engine::build_problem(chem::linear_chain(4, 1.5));
  const auto s = engine::solve_fci(p);
  const auto idx = qubit::sector_projector(4, 0, 8);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(p.h.restricted_matrix(idx));
  EXPECT_NEAR(s.e0, es.eigenvalues()[0], 1e-12);
  EXPECT_NEAR(s.e1, es.eigenvalues()[1], 1e-12);
  EXPECT_NEAR(s.ground_vector.norm(), 1.0, 1e-12);
  EXPECT_NEAR(circuit::expectation(s.ground_vector, p.h), s.e0, 1e-10);
  EXPECT_LE(full_space_ground_energy(p.h), s.e0 + 1e-12);
}

TEST(Fci, SpinFilter) {
  const auto p = engine::build_problem(chem::regular_ring(4, 0.7));
  const auto s2 = qubit::s_squared_operator(4);
  FciOptions singlet;
  singlet.s_squared = 0.0;
  const auto s = engine::solve_fci(p, singlet);
  EXPECT_NEAR(circuit::expectation(s.ground_vector, s2), 0.0, 1e-8);
  const auto any = engine::solve_fci(p);
  // In the tight square ring the sector ground state is a triplet component.
  EXPECT_NEAR(circuit::expectation(any.ground_vector, s2), 2.0, 1e-8);
  EXPECT_LT(any.e0, s.e0);
  FciOptions quintet;
  quintet.s_squared = 6.0;
  EXPECT_GT(engine::solve_fci(p, quintet).e0, s.e0);
  FciOptions bogus;
  bogus.s_squared = 1.5;
  EXPECT_THROW(engine::solve_fci(p, bogus), DomainError);
}

TEST(Fci, PowerRatioCurve) {
  const auto p = engine::build_problem(chem::linear_chain(4, 1.0));
  const auto s = engine::solve_fci(p);
  const auto c = power_ratio_curve(s, 4);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_NEAR(c[0], s.e1 / s.e0, 1e-14);
  EXPECT_NEAR(c[3], std::pow(s.e1 / s.e0, 4), 1e-14);
}

TEST(Reflection, InteractionOptimumIsTheProjectedResidual) {
  std::mt19937_64 rng(23);
  const CMatrix h = random_hermitian(20, rng);
  const CVector psi = random_unit(20, rng);
  const CVector extra = random_unit(20, rng);
  const auto basis = orthonormal_span({psi, extra});
  const auto io = exact_interaction_optimum(h, psi, basis);
  ASSERT_FALSE(io.eigenstate_reached);
  CVector r = h * psi;
  for (const auto& b : basis) r -= b * b.dot(r);
  EXPECT_NEAR(io.c_min, -r.norm(), 1e-12);
  for (const auto& b : basis) EXPECT_LT(std::abs(b.dot(io.vector)), 1e-12);
  EXPECT_NEAR(-std::abs(io.vector.dot(h * psi)), io.c_min, 1e-12);
  // No random admissible vector does better.
  for (int k = 0; k < 200; ++k) {
    CVector t = random_unit(20, rng);
    for (const auto& b : basis) t -= b * b.dot(t);
    t.normalize();
    EXPECT_GE(-std::abs(t.dot(h * psi)), io.c_min - 1e-12);
  }
}

TEST(Reflection, EigenstateIsDetected) {
  std::mt19937_64 rng(24);
  const CMatrix h = random_hermitian(8, rng);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CVector v = es.eigenvectors().col(0);
  EXPECT_TRUE(exact_interaction_optimum(h, v, {v}).eigenstate_reached);
}

TEST(Reflection, GradientDescentReachesTheInteractionOptimum) {
  std::mt19937_64 rng(25);
  const CMatrix h = random_hermitian(16, rng);
  const CVector psi = random_unit(16, rng);
  const auto io = exact_interaction_optimum(h, psi, {psi});
  const auto res = minimize_reflection(ReflectionCost::Interaction, h, psi, {psi});
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.c_star, io.c_min, 1e-8);
  EXPECT_LT(res.gradient_check, 1e-5);
  EXPECT_LT(std::abs(res.vector.dot(psi)), 1e-10);
}

TEST(Reflection, GainLowersTheTwoLevelEnergy) {
  const auto p = engine::build_problem(chem::linear_chain(4, 1.0));
  const auto idx = qubit::sector_projector(4, 0, 8);
  const CMatrix h = p.h.restricted_matrix(idx);
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (idx[a] == p.guess.bits) psi[static_cast<Eigen::Index>(a)] = 1.0;
  ReflectionConfig rc;
  rc.start = exact_interaction_optimum(h, psi, {psi}).vector;
  const auto res = minimize_reflection(ReflectionCost::Gain, h, psi, {psi}, rc);
  EXPECT_LT(res.c_star, 0.0);
  EXPECT_LT(res.gradient_check, 1e-5);
  const cost::TwoLevelBlock b{psi.dot(h * psi).real(), res.vector.dot(h * res.vector).real(),
                              psi.dot(h * res.vector)};
  EXPECT_NEAR(cost::gain_energy(b), res.c_star, 1e-10);
  // At this geometry the reference is a good guess, so one gain step is exact.
  EXPECT_NEAR(b.h00 + res.c_star, engine::solve_fci(p).e0, 1e-8);
}

TEST(Reflection, OrthonormalSpanDropsDependentVectors) {
  std::mt19937_64 rng(26);
  const CVector a = random_unit(6, rng), b = random_unit(6, rng);
  const auto span = orthonormal_span({a, b, a + 2.0 * b});
  ASSERT_EQ(span.size(), 2u);
  EXPECT_NEAR(std::abs(span[0].dot(span[1])), 0.0, 1e-14);
}
