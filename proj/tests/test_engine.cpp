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

#include "vqsm/circuit/state_vector.hpp"
#include "vqsm/engine/subspace.hpp"

using namespace vqsm;
using namespace vqsm::engine;

namespace {

RunConfig exact_config(Algorithm a, CostKind c) {
  RunConfig cfg;
  cfg.algorithm = a;
  cfg.cost = c;
  cfg.trial = TrialSource::exact();
  cfg.eps_w = 1e-12;
  cfg.eps_e = 1e-12;
  cfg.max_iterations = 40;
  return cfg;
}

}  // namespace

TEST(Engine, EigenstateGuessStopsAtFirstStep) {
  auto p = build_problem(chem::linear_chain(2, 0.74));
  qubit::QubitHamiltonian diag(4, 0.2);
  diag.add_term(qubit::PauliString::from_word("ZIII"), 0.3);
  diag.add_term(qubit::PauliString::from_word("IZZI"), -0.1);
  p.h = diag;
  for (auto trial : {TrialSource::exact(), TrialSource::hea(1)}) {
    auto cfg = exact_config(Algorithm::VQSM, CostKind::Interaction);
    cfg.trial = trial;
    cfg.optimizer.restarts = 2;
    cfg.optimizer.max_evals = 2000;
    const auto rep = run(cfg, p, false);
    ASSERT_EQ(rep.records.size(), 1u);
    EXPECT_FALSE(rep.records[0].accepted);
    EXPECT_EQ(rep.status, RunStatus::Converged);
    EXPECT_FALSE(rep.rate.has_value());
  }
}

TEST(Engine, ExactReflectionReachesFci) {
  const auto p = build_problem(chem::linear_chain(4, 1.0));
  for (auto [alg, cost] : {std::pair{Algorithm::VQSM, CostKind::Interaction},
                           std::pair{Algorithm::VQSM, CostKind::TriDiag},
                           std::pair{Algorithm::IVQE, CostKind::Gain}}) {
    const auto rep = run(exact_config(alg, cost), p);
    ASSERT_NE(rep.status, RunStatus::Failed) << rep.message;
    ASSERT_TRUE(rep.e_fci.has_value());
    const auto& last = rep.records.back();
    EXPECT_LT(std::abs(last.e0 - *rep.e_fci), 1e-8) << to_string(alg) << ' ' << to_string(cost);
    double prev = rep.e_reference;
    for (const auto& r : rep.records) {
      EXPECT_LE(r.e0, prev + 1e-12);
      EXPECT_GE(r.e0, *rep.e_fci - 1e-10);
      // Sector-preserving trials keep the particle number and spin projection.
      EXPECT_NEAR(r.n_expect, 4.0, 1e-6);
      EXPECT_NEAR(r.sz_expect, 0.0, 1e-6);
      prev = r.e0;
    }
  }
}

// Hand-rolled sequential two-level chain: each step couples the running state
// to its residual orthogonal to every earlier vector.
TEST(Engine, IvqeInteractionFollowsTheTwoLevelChain) {
  const auto p = build_problem(chem::linear_chain(4, 1.0));
  auto cfg = exact_config(Algorithm::IVQE, CostKind::Interaction);
  cfg.max_iterations = 8;
  const auto rep = run(cfg, p);
  const auto idx = qubit::sector_projector(4, 0, 8);
  const CMatrix h = p.h.restricted_matrix(idx);
  CVector psi = CVector::Zero(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    if (idx[a] == p.guess.bits) psi[static_cast<Eigen::Index>(a)] = 1.0;
  std::vector<CVector> basis{psi};
  double prev = p.e_guess;
  for (const auto& r : rep.records) {
    if (!r.accepted) break;
    CVector t = h * psi;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) t -= b * b.dot(t);
    t.normalize();
    Eigen::Matrix2cd m;
    m << psi.dot(h * psi), psi.dot(h * t), t.dot(h * psi), t.dot(h * t);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m);
    psi = es.eigenvectors()(0, 0) * psi + es.eigenvectors()(1, 0) * t;
    basis.push_back(t);
    EXPECT_NEAR(r.e0, es.eigenvalues()[0], 1e-9) << "n=" << r.n;
    EXPECT_LE(r.e0, prev + 1e-10);
    prev = r.e0;
  }
  EXPECT_GT(rep.records.back().e0, *rep.e_fci);
}

TEST(Engine, VqsmNeverWorseThanIvqeWithTheSameTrials) {
  const auto p = build_problem(chem::linear_chain(4, 1.5));
  auto a = exact_config(Algorithm::VQSM, CostKind::Interaction);
  auto b = exact_config(Algorithm::IVQE, CostKind::Interaction);
  a.max_iterations = b.max_iterations = 3;
  const auto ra = run(a, p), rb = run(b, p);
  ASSERT_EQ(ra.records.size(), 3u);
  ASSERT_EQ(rb.records.size(), 3u);
  EXPECT_LE(ra.records[0].e0, rb.records[0].e0 + 1e-12);
  EXPECT_NEAR(ra.records[0].e0, rb.records[0].e0, 1e-10);
  EXPECT_LE(ra.records[2].e0, rb.records[2].e0 + 1e-12);
}

TEST(Engine, SingleLayerHeaOnHydrogenMolecule) {
  const auto p = build_problem(chem::linear_chain(2, 0.74));
  RunConfig cfg;
  cfg.trial = TrialSource::hea(1);
  cfg.optimizer.restarts = 4;
  cfg.max_iterations = 6;
  const auto rep = run(cfg, p);
  ASSERT_NE(rep.status, RunStatus::Failed) << rep.message;
  EXPECT_LT(rep.records.back().e0 - *rep.e_fci, 1.6e-3);
  ASSERT_TRUE(rep.records[0].study.has_value());
  EXPECT_EQ(rep.records[0].study->samples.size(), 4u);
  EXPECT_EQ(rep.records[0].theta.size(), 8u);
}

TEST(Engine, RunsAreReproducible) {
  const auto p = build_problem(chem::linear_chain(2, 1.2));
  RunConfig cfg;
  cfg.trial = TrialSource::hea(1);
  cfg.optimizer.restarts = 3;
  cfg.max_iterations = 3;
  const auto a = run(cfg, p), b = run(cfg, p);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Engine, ConfigValidation) {
  const auto p = build_problem(chem::linear_chain(2, 0.74));
  auto cfg = exact_config(Algorithm::IVQE, CostKind::TriDiag);
  EXPECT_THROW(run(cfg, p), DomainError);
  cfg = exact_config(Algorithm::VQSM, CostKind::Gain);
  cfg.eps_w = 0.0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg.eps_w = 1e-6;
  cfg.max_iterations = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(Engine, ReportSerialization) {
  const auto p = build_problem(chem::linear_chain(4, 2.0));
  auto cfg = exact_config(Algorithm::VQSM, CostKind::Interaction);
  cfg.max_iterations = 4;
  const auto rep = run(cfg, p);
  const auto j = rep.to_json();
  EXPECT_EQ(j["iterations"].size(), rep.records.size());
  EXPECT_EQ(j["status"], to_string(rep.status));
  EXPECT_DOUBLE_EQ(j["e_fci"].get<double>(), *rep.e_fci);
  EXPECT_TRUE(j["iterations"][0].contains("fidelity"));
  const auto csv = rep.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,E0,cost,omega,fidelity,evals");
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.records.size() + 1);
  for (const auto& r : rep.records) {
    EXPECT_GE(r.fidelity, 0.0);
    EXPECT_LE(r.fidelity, 1.0 + 1e-12);
  }
}

TEST(Engine, FitRate) {
  std::vector<double> e;
  for (int n = 1; n <= 6; ++n) e.push_back(0.1 * std::pow(0.3, n));
  EXPECT_NEAR(fit_rate(e), 0.3, 1e-12);
  e.push_back(1e-13);
  e.push_back(5e-12);
  EXPECT_NEAR(fit_rate(e), 0.3, 1e-12);
  EXPECT_THROW(fit_rate({1e-2, 1e-3}), FitError);
  EXPECT_THROW(fit_rate({1e-2, 1e-12, 1e-3, 1e-4}), FitError);
}

TEST(Engine, OrthogonalizeAgainst) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  std::vector<CVector> basis;
  for (int k = 0; k < 3; ++k) {
    CVector v(10);
    for (auto& z : v) z = {nd(rng), nd(rng)};
    basis.push_back(orthogonalize_against(basis, v));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_NEAR(std::abs(basis[i].dot(basis[j])), i == j ? 1.0 : 0.0, 1e-13);
  const CVector dep = 0.3 * basis[0] - Complex(0.0, 2.0) * basis[2];
  EXPECT_THROW(orthogonalize_against(basis, dep), LinearDependenceError);
}

TEST(Engine, TrialStrings) {
  EXPECT_EQ(to_string(trial_from_string("hea:3")), "hea:3");
  EXPECT_EQ(trial_from_string("exact").kind, TrialSource::Kind::ExactReflection);
  EXPECT_EQ(trial_from_string("hea").n_layers, 1);
  EXPECT_THROW(trial_from_string("hea:x"), DomainError);
  EXPECT_THROW(trial_from_string("hea:-1"), DomainError);
  EXPECT_THROW(cost_from_string("energy"), DomainError);
  EXPECT_EQ(algorithm_from_string("ivqe"), Algorithm::IVQE);
}

TEST(Engine, CostEvaluatorMatchesTheTwoLevelFormula) {
  const auto p = build_problem(chem::linear_chain(4, 1.5));
  auto cfg = exact_config(Algorithm::VQSM, CostKind::Interaction);
  const auto ctx = RunContext::make(p, cfg, false);
  const CVector guess = circuit::determinant_state(p.guess).amplitudes();
  const auto s = initial_state(ctx.h_csr, guess);
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  CVector t = CVector::Zero(guess.size());
  for (auto i : ctx.sector_indices) t[static_cast<Eigen::Index>(i)] = {nd(rng), nd(rng)};
  t.normalize();
  const CVector to = orthogonalize_against(s.basis, t);
  const CMatrix hd = p.h.dense_matrix();
  const cost::TwoLevelBlock b{p.e_guess, to.dot(hd * to).real(), guess.dot(hd * to)};
  EXPECT_NEAR(evaluate_cost(s, ctx.h_csr, t, cfg), cost::interaction_energy(b), 1e-12);
  cfg.cost = CostKind::Gain;
  EXPECT_NEAR(evaluate_cost(s, ctx.h_csr, t, cfg), cost::gain_energy(b), 1e-12);
  EXPECT_EQ(evaluate_cost(s, ctx.h_csr, guess, cfg), 0.0);
}
