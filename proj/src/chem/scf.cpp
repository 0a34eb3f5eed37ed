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

#include "vqsm/chem/scf.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace vqsm::chem {

namespace {

RMatrix lowdin(const RMatrix& s) {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(s);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw PreconditionError("overlap matrix is not positive definite");
  }
  return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

RMatrix two_electron_part(const EriTensor& eri, const RMatrix& density) {
  const int n = eri.n();
  RMatrix g = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += density(k, l) * (eri(i, j, k, l) - 0.5 * eri(i, k, j, l));
      g(i, j) = acc;
    }
  return g;
}

struct Diagonalized {
  RMatrix c;
  RVector eps;
};

Diagonalized diagonalize_fock(const RMatrix& f, const RMatrix& x) {
  const RMatrix fp = x.transpose() * f * x;
  Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (fp + fp.transpose()));
  return {x * es.eigenvectors(), es.eigenvalues()};
}

RMatrix closed_shell_density(const RMatrix& c, int n_occ) {
  const auto occ = c.leftCols(n_occ);
  return 2.0 * occ * occ.transpose();
}

}  // namespace

namespace {

std::optional<ScfResult> attempt(const IntegralSet& ints, int n_occ, const RMatrix& x,
                                 const ScfConfig& cfg, double shift, int max_cycles,
                                 const RMatrix* start_density, double& last_energy) {
  const RMatrix hcore = ints.core_hamiltonian();
  const RMatrix& s = ints.overlap;
  Diagonalized d = diagonalize_fock(hcore, x);
  RMatrix density = start_density ? *start_density : closed_shell_density(d.c, n_occ);

  ScfResult res;
  res.level_shift = shift;
  double energy_prev = 0.0;
  for (int cycle = 1; cycle <= max_cycles; ++cycle) {
    const RMatrix fock = hcore + two_electron_part(ints.eri, density);
    const double energy =
        0.5 * (density.cwiseProduct(hcore + fock)).sum() + ints.e_nuc;
    res.energy_history.push_back(energy);
    last_energy = energy;

    // The shift raises virtual levels only; the fixed point is unchanged.
    const RMatrix shifted = shift == 0.0 ? fock : RMatrix(fock + shift * (s - 0.5 * s * density * s));
    d = diagonalize_fock(shifted, x);
    RMatrix next = closed_shell_density(d.c, n_occ);
    if (cycle <= cfg.damping_cycles && !start_density) {
      next = (1.0 - cfg.damping) * next + cfg.damping * density;
    }
    const double dmax = (next - density).cwiseAbs().maxCoeff();
    const double de = std::abs(energy - energy_prev);
    density = next;
    energy_prev = energy;

    const bool past_damping = start_density || cycle > cfg.damping_cycles;
    if (past_damping && cycle > 1 && dmax < cfg.density_tol && de < cfg.energy_tol) {
      const RMatrix final_fock = hcore + two_electron_part(ints.eri, density);
      d = diagonalize_fock(final_fock, x);
      res.coefficients = d.c;
      res.orbital_energies = d.eps;
      res.energy = energy;
      res.cycles = cycle;
      return res;
    }
  }
  return std::nullopt;
}

}  // namespace

namespace {

std::optional<ScfResult> converge(const IntegralSet& ints, int n_occ, const RMatrix& x,
                                  const ScfConfig& cfg, const RMatrix* start, double& last) {
  std::vector<double> shifts{0.0};
  shifts.insert(shifts.end(), cfg.fallback_level_shifts.begin(), cfg.fallback_level_shifts.end());
  for (double shift : shifts) {
    const int cycles = shift == 0.0 ? cfg.max_cycles : std::max(cfg.max_cycles, cfg.fallback_max_cycles);
    if (auto r = attempt(ints, n_occ, x, cfg, shift, cycles, start, last)) return r;
  }
  return std::nullopt;
}

double density_energy(const IntegralSet& ints, const RMatrix& density) {
  const RMatrix hcore = ints.core_hamiltonian();
  const RMatrix fock = hcore + two_electron_part(ints.eri, density);
  return 0.5 * (density.cwiseProduct(hcore + fock)).sum() + ints.e_nuc;
}

RMatrix rotate(const RMatrix& c, int n_occ, const RVector& mode, double angle) {
  const int n = static_cast<int>(c.cols());
  const int nv = n - n_occ;
  RMatrix k = RMatrix::Zero(n, n);
  for (int i = 0; i < n_occ; ++i)
    for (int a = 0; a < nv; ++a) {
      const double v = angle * mode(i * nv + a);
      k(n_occ + a, i) = v;
      k(i, n_occ + a) = -v;
    }
  return c * RMatrix(k.exp());
}

}  // namespace

RMatrix rhf_orbital_hessian(const IntegralSet& ints, const ScfResult& r, int n_occ) {
  const RMatrix& c = r.coefficients;
  const int n = static_cast<int>(c.cols());
  const int nv = n - n_occ;
  // Quarter transformations, one index at a time.
  std::vector<double> t1(n * n * n * n), t2(n * n * n * n);
  auto at = [n](int p, int q, int s, int t) { return ((p * n + q) * n + s) * n + t; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          double acc = 0.0;
          for (int u = 0; u < n; ++u) acc += c(u, p) * ints.eri(u, q, s, t);
          t1[at(p, q, s, t)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          double acc = 0.0;
          for (int u = 0; u < n; ++u) acc += c(u, q) * t1[at(p, u, s, t)];
          t2[at(p, q, s, t)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          double acc = 0.0;
          for (int u = 0; u < n; ++u) acc += c(u, s) * t2[at(p, q, u, t)];
          t1[at(p, q, s, t)] = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          double acc = 0.0;
          for (int u = 0; u < n; ++u) acc += c(u, t) * t1[at(p, q, s, u)];
          t2[at(p, q, s, t)] = acc;
        }
  auto mo = [&](int p, int q, int s, int t) { return t2[at(p, q, s, t)]; };

  RMatrix hess(n_occ * nv, n_occ * nv);
  for (int i = 0; i < n_occ; ++i)
    for (int a = 0; a < nv; ++a)
      for (int j = 0; j < n_occ; ++j)
        for (int b = 0; b < nv; ++b) {
          const int A = n_occ + a, B = n_occ + b;
          double v = 4.0 * mo(i, A, j, B) - mo(i, j, A, B) - mo(i, B, j, A);
          if (i == j && a == b) v += r.orbital_energies(A) - r.orbital_energies(i);
          hess(i * nv + a, j * nv + b) = v;
        }
  return 0.5 * (hess + hess.transpose());
}

ScfResult rhf_scf(const IntegralSet& ints, int n_elec, const ScfConfig& cfg) {
  const int n = ints.n_orb();
  if (n_elec < 0 || n_elec % 2 != 0 || n_elec > 2 * n) {
    throw PreconditionError("rhf_scf needs an even electron count <= 2 n_orb");
  }
  const int n_occ = n_elec / 2;
  const RMatrix x = lowdin(ints.overlap);
  double last = 0.0;
  auto res = converge(ints, n_occ, x, cfg, nullptr, last);
  if (!res) throw ScfError("RHF did not converge, level-shift fallbacks included", last);
  if (n_occ == 0 || n_occ == n) return *res;

  for (int round = 0;; ++round) {
    Eigen::SelfAdjointEigenSolver<RMatrix> es(rhf_orbital_hessian(ints, *res, n_occ));
    res->hessian_min = es.eigenvalues()(0);
    if (!cfg.follow_instabilities || res->hessian_min > -cfg.stability_tol ||
        round >= cfg.max_stability_rounds) {
      return *res;
    }
    // Coarse line search along the softest mode, then re-converge.
    const RVector mode = es.eigenvectors().col(0);
    double best_e = res->energy, best_angle = 0.0;
    for (int k = 1; k <= 16; ++k) {
      const double angle = k * (M_PI / 32.0);
      const double e = density_energy(ints, closed_shell_density(rotate(res->coefficients, n_occ, mode, angle), n_occ));
      if (e < best_e) best_e = e, best_angle = angle;
    }
    if (best_angle == 0.0) return *res;
    const RMatrix start = closed_shell_density(rotate(res->coefficients, n_occ, mode, best_angle), n_occ);
    auto next = converge(ints, n_occ, x, cfg, &start, last);
    if (!next || next->energy > res->energy - 1e-10) return *res;
    next->stability_rounds = res->stability_rounds + 1;
    res = std::move(next);
  }
}

}  // namespace vqsm::chem
