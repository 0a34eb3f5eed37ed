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

#include "vqsm/oracles/tridiagonal.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace vqsm::oracles {

RMatrix TridiagonalMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(alpha.size());
  RMatrix t = RMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    t(i + 1, i) = t(i, i + 1) = beta[static_cast<std::size_t>(i)];
  }
  return t;
}

double TridiagonalMatrix::ground_energy(std::size_t k) const {
  if (k == 0 || k > alpha.size()) throw DomainError("block size out of range");
  const auto n = static_cast<Eigen::Index>(k);
  RVector d(n), e(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) d[i] = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = beta[static_cast<std::size_t>(i)];
  if (n == 1) return d[0];
  Eigen::SelfAdjointEigenSolver<RMatrix> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

TridiagonalMatrix lanczos(const CMatrix& h, const CVector& v0, std::size_t n_steps) {
  if (h.rows() != h.cols() || h.rows() != v0.size()) throw PreconditionError("dimension mismatch");
  if (std::abs(v0.norm() - 1.0) > 1e-10) throw PreconditionError("start vector must be normalized");
  TridiagonalMatrix out;
  if (n_steps == 0) return out;
  out.basis.push_back(v0);
  for (std::size_t j = 0;; ++j) {
    const CVector& q = out.basis[j];
    CVector w = h * q;
    out.alpha.push_back(q.dot(w).real());
    w -= out.alpha.back() * q;
    if (j > 0) w -= out.beta[j - 1] * out.basis[j - 1];
    for (int pass = 0; pass < 2; ++pass) {
      CVector corr = CVector::Zero(w.size());
      for (const auto& b : out.basis) corr += b.dot(w) * b;
      w -= corr;
    }
    if (j + 1 >= n_steps) break;
    const double beta = w.norm();
    if (beta < kLanczosBreakdown) break;
    out.beta.push_back(beta);
    out.basis.push_back(w / beta);
  }
  return out;
}

namespace {

// Reflector P = I - 2 u u^H / |u|^2 mapping x to alpha e_0, |alpha| = |x|.
CVector reflector(const CVector& x) {
  CVector u = x;
  const double nx = x.norm();
  const Complex phase = std::abs(x[0]) > 0.0 ? x[0] / std::abs(x[0]) : Complex(1.0);
  u[0] += phase * nx;
  return u;
}

// A <- P A P on rows/cols [k, n) with P built from u (length n - k).
void apply_two_sided(CMatrix& a, const CVector& u, Eigen::Index k) {
  const double uu = u.squaredNorm();
  if (uu == 0.0) return;
  const Eigen::Index m = u.size();
  auto rows = a.middleRows(k, m);
  const Eigen::RowVectorXcd left = u.adjoint() * rows;
  rows.noalias() -= (2.0 / uu) * u * left;
  auto cols = a.middleCols(k, m);
  const CVector right = cols * u;
  cols.noalias() -= (2.0 / uu) * right * u.adjoint();
}

void apply_right(CMatrix& q, const CVector& u, Eigen::Index k) {
  const double uu = u.squaredNorm();
  if (uu == 0.0) return;
  auto cols = q.middleCols(k, u.size());
  const CVector right = cols * u;
  cols.noalias() -= (2.0 / uu) * right * u.adjoint();
}

}  // namespace

TridiagonalMatrix householder_tridiag(const CMatrix& h, const CVector& v0) {
  if (h.rows() != h.cols() || h.rows() != v0.size()) throw PreconditionError("dimension mismatch");
  if (std::abs(v0.norm() - 1.0) > 1e-10) throw PreconditionError("start vector must be normalized");
  const Eigen::Index n = h.rows();
  CMatrix a = h;
  CMatrix q = CMatrix::Identity(n, n);

  // First reflection sends e_0 to v0 up to a phase.
  const CVector u0 = reflector(v0);
  apply_two_sided(a, u0, 0);
  apply_right(q, u0, 0);

  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const CVector x = a.col(k).tail(n - k - 1);
    if (x.tail(x.size() - 1).norm() == 0.0) continue;
    const CVector u = reflector(x);
    apply_two_sided(a, u, k + 1);
    apply_right(q, u, k + 1);
  }

  TridiagonalMatrix out;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.alpha.push_back(a(i, i).real());
    out.basis.push_back(q.col(i));
    if (i + 1 < n) out.beta.push_back(std::abs(a(i + 1, i)));
  }
  return out;
}

}  // namespace vqsm::oracles
