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

#include "vqsm/chem/integrals.hpp"

#include <cmath>
#include <numbers>

namespace vqsm::chem {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTaylorThreshold = 1e-2;

struct Primitive {
  double alpha;
  double coef;
  Vec3 center;
};

std::vector<Primitive> primitives(const ContractedShell& s) {
  std::vector<Primitive> out;
  for (int k = 0; k < 3; ++k) out.push_back({s.exponents[k], s.coefficients[k], s.center});
  return out;
}

double prim_overlap(const Primitive& a, const Primitive& b) {
  const double p = a.alpha + b.alpha;
  const double r2 = (a.center - b.center).squaredNorm();
  return std::pow(kPi / p, 1.5) * std::exp(-a.alpha * b.alpha / p * r2);
}

double prim_kinetic(const Primitive& a, const Primitive& b) {
  const double p = a.alpha + b.alpha;
  const double mu = a.alpha * b.alpha / p;
  const double r2 = (a.center - b.center).squaredNorm();
  return mu * (3.0 - 2.0 * mu * r2) * prim_overlap(a, b);
}

double prim_nuclear(const Primitive& a, const Primitive& b, const Vec3& c, double z) {
  const double p = a.alpha + b.alpha;
  const double r2 = (a.center - b.center).squaredNorm();
  const Vec3 pc = (a.alpha * a.center + b.alpha * b.center) / p - c;
  return -2.0 * kPi / p * z * std::exp(-a.alpha * b.alpha / p * r2) *
         boys_f0(p * pc.squaredNorm());
}

double prim_eri(const Primitive& a, const Primitive& b, const Primitive& c,
                const Primitive& d) {
  const double p = a.alpha + b.alpha;
  const double q = c.alpha + d.alpha;
  const Vec3 P = (a.alpha * a.center + b.alpha * b.center) / p;
  const Vec3 Q = (c.alpha * c.center + d.alpha * d.center) / q;
  const double kab = std::exp(-a.alpha * b.alpha / p * (a.center - b.center).squaredNorm());
  const double kcd = std::exp(-c.alpha * d.alpha / q * (c.center - d.center).squaredNorm());
  const double pre = 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q));
  return pre * kab * kcd * boys_f0(p * q / (p + q) * (P - Q).squaredNorm());
}

}  // namespace

double boys_f0(double x) {
  if (!(x >= 0.0)) throw DomainError("boys_f0 requires x >= 0");
  if (x < kTaylorThreshold) {
    // sum_k (-x)^k / (k! (2k+1))
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 12; ++k) {
      term *= -x / k;
      sum += term / (2 * k + 1);
    }
    return sum;
  }
  const double s = std::sqrt(x);
  return 0.5 * std::sqrt(kPi / x) * std::erf(s);
}

ContractedShell sto3g_hydrogen(const Vec3& center_bohr) {
  ContractedShell s;
  s.center = center_bohr;
  s.exponents = {3.42525091, 0.62391373, 0.16885540};
  const std::array<double, 3> d = {0.15432897, 0.53532814, 0.44463454};
  for (int k = 0; k < 3; ++k) {
    s.coefficients[k] = d[k] * std::pow(2.0 * s.exponents[k] / kPi, 0.75);
  }
  // Renormalize the contraction so the self-overlap is one to machine precision.
  const double norm = overlap_integral(s, s);
  for (double& c : s.coefficients) c /= std::sqrt(norm);
  return s;
}

double overlap_integral(const ContractedShell& a, const ContractedShell& b) {
  double s = 0.0;
  for (const auto& pa : primitives(a))
    for (const auto& pb : primitives(b)) s += pa.coef * pb.coef * prim_overlap(pa, pb);
  return s;
}

EriTensor::EriTensor(int n) : n_(n) {
  const std::size_t npair = static_cast<std::size_t>(n) * (n + 1) / 2;
  data_.assign(npair * (npair + 1) / 2, 0.0);
}

std::vector<ContractedShell> build_basis(const Geometry& geom) {
  geom.validate();
  std::vector<ContractedShell> basis;
  for (const auto& a : geom.atoms) basis.push_back(sto3g_hydrogen(a / kBohrInAngstrom));
  return basis;
}

IntegralSet build_integrals(const Geometry& geom) {
  const auto basis = build_basis(geom);
  const int n = static_cast<int>(basis.size());
  std::vector<std::vector<Primitive>> prims;
  for (const auto& s : basis) prims.push_back(primitives(s));

  IntegralSet ints;
  ints.overlap = RMatrix::Zero(n, n);
  ints.kinetic = RMatrix::Zero(n, n);
  ints.nuclear = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = 0.0, t = 0.0, v = 0.0;
      for (const auto& pa : prims[i]) {
        for (const auto& pb : prims[j]) {
          const double cc = pa.coef * pb.coef;
          s += cc * prim_overlap(pa, pb);
          t += cc * prim_kinetic(pa, pb);
          for (const auto& shell : basis) v += cc * prim_nuclear(pa, pb, shell.center, 1.0);
        }
      }
      ints.overlap(i, j) = ints.overlap(j, i) = s;
      ints.kinetic(i, j) = ints.kinetic(j, i) = t;
      ints.nuclear(i, j) = ints.nuclear(j, i) = v;
    }
  }

  ints.eri = EriTensor(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          double g = 0.0;
          for (const auto& pa : prims[i])
            for (const auto& pb : prims[j])
              for (const auto& pc : prims[k])
                for (const auto& pd : prims[l])
                  g += pa.coef * pb.coef * pc.coef * pd.coef * prim_eri(pa, pb, pc, pd);
          ints.eri.set(i, j, k, l, g);
        }

  ints.e_nuc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      ints.e_nuc += 1.0 / (basis[a].center - basis[b].center).norm();
  return ints;
}

}  // namespace vqsm::chem
