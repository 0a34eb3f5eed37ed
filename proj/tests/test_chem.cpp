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
#include <sstream>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "vqsm/chem/fcidump.hpp"
#include "vqsm/chem/geometry.hpp"
#include "vqsm/chem/integrals.hpp"
#include "vqsm/chem/mo_integrals.hpp"
#include "vqsm/chem/scf.hpp"

using namespace vqsm;
using namespace vqsm::chem;

namespace {

// Composite Simpson rule on [0, 1].
double simpson_boys(double x, int n = 20000) {
  const double h = 1.0 / n;
  double s = 1.0 + std::exp(-x);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * std::exp(-x * (i * h) * (i * h));
  return s * h / 3.0;
}

// Overlap by quadrature in cylindrical coordinates around the bond axis.
double quadrature_overlap(const ContractedShell& a, const ContractedShell& b) {
  const Vec3 axis = (b.center - a.center).normalized();
  const double r = (b.center - a.center).norm();
  auto phi = [](const ContractedShell& s, double d2) {
    double v = 0.0;
    for (int k = 0; k < 3; ++k) v += s.coefficients[k] * std::exp(-s.exponents[k] * d2);
    return v;
  };
  (void)axis;
  const int nz = 1200, nr = 800;
  const double zlo = -8.0, zhi = r + 8.0, rmax = 8.0;
  const double dz = (zhi - zlo) / nz, dr = rmax / nr;
  double acc = 0.0;
  for (int i = 0; i < nz; ++i) {
    const double z = zlo + (i + 0.5) * dz;
    for (int j = 0; j < nr; ++j) {
      const double rho = (j + 0.5) * dr;
      const double da = rho * rho + z * z;
      const double db = rho * rho + (z - r) * (z - r);
      acc += 2.0 * M_PI * rho * phi(a, da) * phi(b, db);
    }
  }
  return acc * dz * dr;
}

double closed_shell_energy(const MOIntegrals& mo, int n_occ) {
  double e = mo.e_nuc;
  for (int i = 0; i < n_occ; ++i) {
    e += 2.0 * mo.h(i, i);
    for (int j = 0; j < n_occ; ++j) e += 2.0 * mo.g(i, i, j, j) - mo.g(i, j, j, i);
  }
  return e;
}

}  // namespace

TEST(Boys, MatchesQuadrature) {
  for (double x : {0.0, 1e-9, 1e-4, 0.3, 2.0, 17.0, 60.0}) {
    EXPECT_NEAR(boys_f0(x), simpson_boys(x), 1e-11) << "x=" << x;
  }
}

TEST(Integrals, ShellIsNormalized) {
  const auto s = sto3g_hydrogen(Vec3::Zero());
  EXPECT_NEAR(overlap_integral(s, s), 1.0, 1e-6);
}

TEST(Integrals, OverlapMatchesQuadrature) {
  const auto a = sto3g_hydrogen(Vec3::Zero());
  const auto b = sto3g_hydrogen(Vec3(0, 0, 1.4));
  EXPECT_NEAR(overlap_integral(a, b), quadrature_overlap(a, b), 1e-5);
}

TEST(Integrals, EriSymmetryAndPositivity) {
  const auto ints = build_integrals(linear_chain(3, 0.9, 0, 1));
  const int n = ints.n_orb();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = ints.eri(i, j, k, l);
          EXPECT_EQ(v, ints.eri(j, i, k, l));
          EXPECT_EQ(v, ints.eri(k, l, i, j));
          EXPECT_EQ(v, ints.eri(l, k, j, i));
        }
  for (int i = 0; i < n; ++i) EXPECT_GT(ints.eri(i, i, i, i), 0.0);
  EXPECT_TRUE(ints.overlap.isApprox(ints.overlap.transpose()));
  Eigen::SelfAdjointEigenSolver<RMatrix> es(ints.overlap);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(Integrals, NuclearRepulsion) {
  const auto ints = build_integrals(linear_chain(2, 1.0));
  EXPECT_NEAR(ints.e_nuc, kBohrInAngstrom / 1.0, 1e-12);
}

TEST(Geometry, Builders) {
  const auto c = linear_chain(4, 1.5);
  EXPECT_EQ(c.n_atoms(), 4);
  EXPECT_NEAR((c.atoms[1] - c.atoms[0]).norm(), 1.5, 1e-12);
  const auto r = regular_ring(4, 0.8);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR((r.atoms[(i + 1) % 4] - r.atoms[i]).norm(), 0.8, 1e-12);
  const auto cation = linear_chain(4, 1.0, 1, 1);
  EXPECT_EQ(cation.n_electrons(), 3);
  EXPECT_EQ(cation.ms2(), 1);
}

TEST(Geometry, Errors) {
  EXPECT_THROW(linear_chain(2, 0.0), GeometryError);
  EXPECT_THROW(linear_chain(4, 1.0, 0, 1), GeometryError);  // parity mismatch
  EXPECT_THROW(linear_chain(2, 1.0, 3, 1), GeometryError);  // negative electron count
}

TEST(Geometry, JsonRoundTrip) {
  const auto g = regular_ring(4, 0.9, -1, 1);
  const auto h = Geometry::from_json(g.to_json());
  EXPECT_EQ(h.n_alpha, g.n_alpha);
  EXPECT_EQ(h.n_beta, g.n_beta);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(h.atoms[i], g.atoms[i]);
}

// Literature STO-3G values for H2 near equilibrium.
TEST(Scf, HydrogenMoleculeReference) {
  const auto r = rhf_scf(build_integrals(linear_chain(2, 0.7414)), 2);
  EXPECT_NEAR(r.energy, -1.1167, 1e-3);
}

TEST(Scf, StationarityConditions) {
  const auto ints = build_integrals(linear_chain(4, 1.3));
  const auto r = rhf_scf(ints, 4);
  const RMatrix& c = r.coefficients;
  EXPECT_TRUE((c.transpose() * ints.overlap * c).isIdentity(1e-10));
  const RMatrix p = 2.0 * c.leftCols(2) * c.leftCols(2).transpose();
  EXPECT_TRUE((p * ints.overlap * p).isApprox(2.0 * p, 1e-9));
  // The Fock matrix in the MO basis is diagonal at convergence.
  const auto mo = transform_to_mo(ints, c);
  RMatrix f = mo.h;
  for (int p_ = 0; p_ < 4; ++p_)
    for (int q = 0; q < 4; ++q)
      for (int i = 0; i < 2; ++i) f(p_, q) += 2.0 * mo.g(p_, q, i, i) - mo.g(p_, i, i, q);
  for (int p_ = 0; p_ < 4; ++p_)
    for (int q = 0; q < 4; ++q)
      if (p_ != q) { EXPECT_NEAR(f(p_, q), 0.0, 1e-7); }
  EXPECT_NEAR(closed_shell_energy(mo, 2), r.energy, 1e-10);
}

TEST(Scf, HessianMatchesEnergyCurvature) {
  const auto ints = build_integrals(linear_chain(4, 1.0));
  const auto r = rhf_scf(ints, 4);
  const RMatrix hess = rhf_orbital_hessian(ints, r, 2);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  RVector k(hess.rows());
  for (Eigen::Index i = 0; i < k.size(); ++i) k[i] = nd(rng);
  k.normalize();
  auto energy = [&](double t) {
    RMatrix kk = RMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a) {
        kk(2 + a, i) = t * k(i * 2 + a);
        kk(i, 2 + a) = -t * k(i * 2 + a);
      }
    return closed_shell_energy(transform_to_mo(ints, r.coefficients * RMatrix(kk.exp())), 2);
  };
  const double eps = 1e-3;
  const double d2 = (energy(eps) - 2.0 * energy(0.0) + energy(-eps)) / (eps * eps);
  EXPECT_NEAR(d2, 4.0 * k.dot(hess * k), 1e-4);
}

TEST(Scf, StretchedChainsConverge) {
  for (double d : {2.5, 3.5, 5.0}) {
    const auto r = rhf_scf(build_integrals(linear_chain(4, d)), 4);
    EXPECT_GT(r.hessian_min, -1e-6) << d;
  }
}

TEST(Scf, SquareRingLeavesSaddlePoint) {
  const auto ints = build_integrals(regular_ring(4, 1.0));
  ScfConfig plain;
  plain.follow_instabilities = false;
  const auto saddle = rhf_scf(ints, 4, plain);
  const auto stable = rhf_scf(ints, 4);
  EXPECT_LT(saddle.hessian_min, -1e-3);
  EXPECT_GT(stable.hessian_min, -1e-6);
  EXPECT_LT(stable.energy, saddle.energy - 1e-3);
  EXPECT_GE(stable.stability_rounds, 1);
}

TEST(Scf, RejectsOddElectrons) {
  EXPECT_THROW(rhf_scf(build_integrals(linear_chain(3, 1.0, 0, 1)), 3), PreconditionError);
}

TEST(Scf, ReportsNonConvergence) {
  ScfConfig cfg;
  cfg.max_cycles = 2;
  cfg.fallback_level_shifts.clear();
  try {
    rhf_scf(build_integrals(linear_chain(4, 1.0)), 4, cfg);
    FAIL() << "expected ScfError";
  } catch (const ScfError& e) {
    EXPECT_TRUE(std::isfinite(e.last_energy()));
  }
}

TEST(Fcidump, RoundTripIsExact) {
  const auto ints = build_integrals(linear_chain(4, 1.1));
  auto mo = transform_to_mo(ints, rhf_scf(ints, 4).coefficients);
  mo.n_elec = 4;
  mo.ms2 = 0;
  const auto back = parse_fcidump_string(write_fcidump(mo));
  EXPECT_EQ(back.n_orb, mo.n_orb);
  EXPECT_EQ(back.n_elec, mo.n_elec);
  EXPECT_EQ(back.ms2, mo.ms2);
  EXPECT_EQ(back.e_nuc, mo.e_nuc);
  EXPECT_EQ(back.h, mo.h);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) EXPECT_EQ(back.g(i, j, k, l), mo.g(i, j, k, l));
  EXPECT_EQ(write_fcidump(back), write_fcidump(mo));
}

TEST(Fcidump, ParsesHandWrittenFile) {
  const std::string text =
      " &FCI NORB=2,NELEC=2,MS2=0,\n  ORBSYM=1,1,\n  ISYM=1,\n &END\n"
      "  0.6  1 1 1 1\n  0.2  2 1 1 1\n  0.1  2 2 1 1\n"
      " -1.2  1 1 0 0\n -0.5  2 2 0 0\n  0.7  0 0 0 0\n";
  const auto mo = parse_fcidump_string(text);
  EXPECT_EQ(mo.n_orb, 2);
  EXPECT_DOUBLE_EQ(mo.g(0, 1, 0, 0), 0.2);
  EXPECT_DOUBLE_EQ(mo.g(0, 0, 0, 1), 0.2);
  EXPECT_DOUBLE_EQ(mo.g(1, 1, 0, 0), 0.1);
  EXPECT_DOUBLE_EQ(mo.h(1, 1), -0.5);
  EXPECT_DOUBLE_EQ(mo.e_nuc, 0.7);
}

TEST(Fcidump, ErrorsCarryLineNumbers) {
  const std::string text = " &FCI NORB=2,NELEC=2,MS2=0,\n &END\n  0.6  1 1 1 1\n  abc 1 1 0 0\n";
  try {
    parse_fcidump_string(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_fcidump_string(" &FCI NORB=2,NELEC=2,MS2=0,\n &END\n 1.0 3 1 1 1\n"), ParseError);
}
