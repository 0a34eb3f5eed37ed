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

#include "vqsm/oracles/reflection.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "vqsm/cost/two_level.hpp"

namespace vqsm::oracles {

std::vector<CVector> orthonormal_span(const std::vector<CVector>& vectors, double tol) {
  std::vector<CVector> out;
  for (const auto& v : vectors) {
    CVector r = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) r -= b.dot(r) * b;
    const double nr = r.norm();
    if (nr > tol) out.push_back(r / nr);
  }
  return out;
}

namespace {

CVector project_out(const std::vector<CVector>& span, CVector v) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : span) v -= b.dot(v) * b;
  return v;
}

std::vector<CVector> complement_span(const CVector& psi_prev, const std::vector<CVector>& forbidden) {
  std::vector<CVector> all{psi_prev};
  all.insert(all.end(), forbidden.begin(), forbidden.end());
  return orthonormal_span(all);
}

struct Objective {
  ReflectionCost kind;
  const CMatrix& h;
  CVector w;  // H psi_prev
  double h00;

  double value(const CVector& t) const {
    const Complex a = w.dot(t);
    if (kind == ReflectionCost::Interaction) return -std::abs(a);
    const double h11 = t.dot(h * t).real();
    try {
      return cost::gain_energy({h00, h11, a});
    } catch (const DegenerateGapError&) {
      return std::numeric_limits<double>::infinity();
    }
  }

  // Euclidean gradient g with df = Re(g^H dt).
  CVector gradient(const CVector& t) const {
    const Complex a = w.dot(t);
    const double abs_a = std::abs(a);
    if (kind == ReflectionCost::Interaction) {
      if (abs_a == 0.0) return CVector::Zero(t.size());
      return -(a / abs_a) * w;
    }
    const CVector ht = h * t;
    const double delta = t.dot(ht).real() - h00;
    const double s = std::hypot(0.5 * delta, abs_a);
    if (s == 0.0) return ht;
    const double sgn = delta >= 0.0 ? 1.0 : -1.0;
    return (1.0 - sgn * delta / (2.0 * s)) * ht - (sgn / s) * a * w;
  }
};

}  // namespace

InteractionOptimum exact_interaction_optimum(const CMatrix& h, const CVector& psi_prev,
                                             const std::vector<CVector>& forbidden) {
  if (h.rows() != psi_prev.size()) throw PreconditionError("dimension mismatch");
  if (std::abs(psi_prev.norm() - 1.0) > 1e-10) throw PreconditionError("psi_prev must be normalized");
  const auto span = complement_span(psi_prev, forbidden);
  const CVector r = project_out(span, h * psi_prev);
  InteractionOptimum out;
  const double nr = r.norm();
  out.c_min = -nr;
  if (nr < kEigenstateResidual) {
    out.eigenstate_reached = true;
    out.vector = CVector::Zero(r.size());
    out.c_min = 0.0;
    return out;
  }
  out.vector = r / nr;
  return out;
}

ReflectionResult minimize_reflection(ReflectionCost cost, const CMatrix& h, const CVector& psi_prev,
                                     const std::vector<CVector>& forbidden,
                                     const ReflectionConfig& cfg) {
  if (h.rows() != psi_prev.size()) throw PreconditionError("dimension mismatch");
  if (std::abs(psi_prev.norm() - 1.0) > 1e-10) throw PreconditionError("psi_prev must be normalized");
  const auto span = complement_span(psi_prev, forbidden);
  const Objective obj{cost, h, h * psi_prev, psi_prev.dot(h * psi_prev).real()};
  const Eigen::Index n = h.rows();

  auto retract = [&](const CVector& v) -> CVector {
    CVector p = project_out(span, v);
    const double np = p.norm();
    return np > 0.0 ? CVector(p / np) : p;
  };

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal;
  auto random_vector = [&] {
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
  };

  CVector t;
  if (cfg.start) {
    t = retract(*cfg.start);
  } else {
    t = retract(random_vector());
  }
  if (t.norm() == 0.0) throw PreconditionError("complement is empty or start vector lies in the span");

  auto tangent = [&](const CVector& at, const CVector& g) {
    CVector p = project_out(span, g);
    return CVector(p - at.dot(p) * at);
  };

  ReflectionResult res;
  {
    CVector d = tangent(t, random_vector());
    d /= d.norm();
    const double eps = 1e-5;
    const double fd = (obj.value(retract(t + eps * d)) - obj.value(retract(t - eps * d))) / (2.0 * eps);
    const double an = tangent(t, obj.gradient(t)).dot(d).real();
    res.gradient_check = std::abs(fd - an) / std::max(std::abs(an), 1e-12);
  }

  double f = obj.value(t);
  double step = 1.0;
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    const CVector gp = tangent(t, obj.gradient(t));
    const double g2 = gp.squaredNorm();
    if (std::sqrt(g2) < cfg.grad_tol) {
      res.converged = true;
      break;
    }
    step = std::min(step * 2.0, 1e3);
    bool accepted = false;
    while (step > 1e-14) {
      const CVector cand = retract(t - step * gp);
      const double fc = obj.value(cand);
      if (fc <= f - 1e-4 * step * g2) {
        const double df = f - fc;
        t = cand;
        f = fc;
        accepted = true;
        if (df <= cfg.ftol * std::max(1.0, std::abs(f))) res.converged = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No descent left at working precision (e.g. a constraint boundary).
      res.converged = true;
      break;
    }
    if (res.converged) break;
  }
  res.iterations = it;
  res.warning = !res.converged;
  res.vector = t;
  res.c_star = f;
  return res;
}

}  // namespace vqsm::oracles
