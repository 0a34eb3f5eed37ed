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

#include "vqsm/engine/subspace.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "vqsm/oracles/reflection.hpp"

namespace vqsm::engine {

namespace {

CVector apply(const kernels::CsrMatrix& h, const CVector& v) {
  CVector out(v.size());
  kernels::csr_matvec(h, {v.data(), static_cast<std::size_t>(v.size())},
                      {out.data(), static_cast<std::size_t>(out.size())});
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (!(eps_w > 0.0) || !(eps_e > 0.0)) throw DomainError("tolerances must be positive");
  if (max_iterations < 1) throw DomainError("max_iterations must be >= 1");
  if (cost == CostKind::TriDiag && algorithm != Algorithm::VQSM) {
    throw DomainError("the tridiagonal cost is only defined for VQSM");
  }
  if (trial.kind == TrialSource::Kind::Hea && trial.n_layers < 0) {
    throw DomainError("layer count must be nonnegative");
  }
}

CVector SubspaceState::ground_vector() const {
  CVector v = CVector::Zero(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) v += ground_coeffs[static_cast<Eigen::Index>(k)] * basis[k];
  return v;
}

CVector SubspaceState::h_ground_vector() const {
  CVector v = CVector::Zero(h_basis.front().size());
  for (std::size_t k = 0; k < h_basis.size(); ++k) v += ground_coeffs[static_cast<Eigen::Index>(k)] * h_basis[k];
  return v;
}

SubspaceState initial_state(const kernels::CsrMatrix& h, const CVector& guess) {
  if (std::abs(guess.norm() - 1.0) > 1e-10) throw PreconditionError("guess must be normalized");
  SubspaceState s;
  s.basis.push_back(guess);
  s.h_basis.push_back(apply(h, guess));
  s.h_mat = CMatrix::Constant(1, 1, guess.dot(s.h_basis[0]).real());
  s.ground_coeffs = CVector::Ones(1);
  s.e0 = s.h_mat(0, 0).real();
  s.omega = 1.0;
  return s;
}

CVector orthogonalize_against(const std::vector<CVector>& basis, const CVector& v) {
  CVector r = v;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) r -= b.dot(r) * b;
  const double nr = r.norm();
  if (nr < kLinearDependence) throw LinearDependenceError("trial lies in the span of the basis");
  return r / nr;
}

CostEvaluator::CostEvaluator(const SubspaceState& s, const kernels::CsrMatrix& h, const RunConfig& cfg,
                             const std::vector<std::uint8_t>* sector_mask)
    : state_(s), h_(h), kind_(cfg.cost), mask_(sector_mask) {
  if (kind_ == CostKind::TriDiag) {
    w_ground_ = s.h_basis.back();
    const auto k = static_cast<Eigen::Index>(s.size() - 1);
    h00_ = s.h_mat(k, k).real();
  } else {
    w_ground_ = s.h_ground_vector();
    h00_ = s.e0;
  }
  const auto dim = s.basis.front().size();
  const auto k = static_cast<Eigen::Index>(s.size());
  b_.resize(dim, k);
  hb_.resize(dim, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    b_.col(j) = s.basis[static_cast<std::size_t>(j)];
    hb_.col(j) = s.h_basis[static_cast<std::size_t>(j)];
  }
  bw_ = b_.adjoint() * w_ground_;
}

std::optional<CVector> CostEvaluator::prepare(const CVector& raw) const {
  CVector v = raw;
  if (mask_) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!(*mask_)[static_cast<std::size_t>(i)]) v[i] = 0.0;
    const double nv = v.norm();
    if (nv < kLinearDependence) return std::nullopt;
    v /= nv;
  }
  try {
    return orthogonalize_against(state_.basis, v);
  } catch (const LinearDependenceError&) {
    return std::nullopt;
  }
}

cost::TwoLevelBlock CostEvaluator::block(const CVector& t, Scratch& scratch) const {
  cost::TwoLevelBlock b;
  b.h00 = h00_;
  b.h01 = w_ground_.dot(t);
  scratch.ht.resize(t.size());
  kernels::csr_matvec(h_, {t.data(), static_cast<std::size_t>(t.size())},
                      {scratch.ht.data(), static_cast<std::size_t>(t.size())});
  b.h11 = t.dot(scratch.ht).real();
  return b;
}

double CostEvaluator::operator()(const CVector& raw, Scratch& scratch) const {
  const CVector* v = &raw;
  if (mask_) {
    scratch.t = raw;
    for (Eigen::Index i = 0; i < raw.size(); ++i)
      if (!(*mask_)[static_cast<std::size_t>(i)]) scratch.t[i] = 0.0;
    const double nv = scratch.t.norm();
    if (nv < kLinearDependence) return 0.0;
    scratch.t /= nv;
    v = &scratch.t;
  }
  // Projected quantities from B^H v; falls back to explicit Gram-Schmidt when
  // the residual is small enough for cancellation to matter.
  scratch.c.noalias() = b_.adjoint() * *v;
  const double r2 = v->squaredNorm() - scratch.c.squaredNorm();
  if (r2 < 1e-4) {
    auto t = prepare(raw);
    if (!t) return 0.0;
    scratch.t = std::move(*t);
    if (kind_ != CostKind::Gain) return -std::abs(w_ground_.dot(scratch.t));
    return cost::gain_energy(block(scratch.t, scratch));
  }
  const double nr = std::sqrt(r2);
  const Complex a = (w_ground_.dot(*v) - bw_.dot(scratch.c)) / nr;
  if (kind_ != CostKind::Gain) return -std::abs(a);
  scratch.ht.resize(v->size());
  kernels::csr_matvec(h_, {v->data(), static_cast<std::size_t>(v->size())},
                      {scratch.ht.data(), static_cast<std::size_t>(v->size())});
  const CVector bhv = hb_.adjoint() * *v;
  const double vhv = v->dot(scratch.ht).real();
  const double h11 =
      (vhv - 2.0 * scratch.c.dot(bhv).real() + scratch.c.dot(state_.h_mat * scratch.c).real()) / r2;
  return cost::gain_energy({h00_, h11, a});
}

double evaluate_cost(const SubspaceState& s, const kernels::CsrMatrix& h, const CVector& trial_raw,
                     const RunConfig& cfg) {
  CostEvaluator ev(s, h, cfg, nullptr);
  CostEvaluator::Scratch scratch;
  return ev(trial_raw, scratch);
}

RunContext RunContext::make(const Problem& p, const RunConfig& cfg, bool attach_fci) {
  RunContext ctx;
  ctx.problem = &p;
  ctx.h_csr = p.h.to_csr();
  const auto sec = p.sector();
  ctx.sector_indices = qubit::sector_projector(sec.n_elec, sec.sz2, p.h.n_qubits());
  ctx.sector_mask.assign(p.h.dim(), 0);
  for (auto i : ctx.sector_indices) ctx.sector_mask[i] = 1;
  ctx.full_space_mode = cfg.full_space_reflection;
  if (cfg.trial.kind == TrialSource::Kind::ExactReflection) {
    ctx.h_dense = ctx.full_space_mode ? p.h.dense_matrix() : p.h.restricted_matrix(ctx.sector_indices);
  } else if (!ctx.full_space_mode && ctx.sector_indices.size() <= kDenseSectorLimit) {
    // Kept for classical comparisons (Lanczos, optimal costs).
    ctx.h_dense = p.h.restricted_matrix(ctx.sector_indices);
  }
  if (attach_fci) ctx.fci = solve_fci(p);
  return ctx;
}

CVector RunContext::restrict(const CVector& full) const {
  if (full_space_mode) return full;
  CVector out(static_cast<Eigen::Index>(sector_indices.size()));
  for (std::size_t a = 0; a < sector_indices.size(); ++a) {
    out[static_cast<Eigen::Index>(a)] = full[static_cast<Eigen::Index>(sector_indices[a])];
  }
  return out;
}

CVector RunContext::embed(const CVector& local) const {
  if (full_space_mode) return local;
  CVector out = CVector::Zero(static_cast<Eigen::Index>(sector_mask.size()));
  for (std::size_t a = 0; a < sector_indices.size(); ++a) {
    out[static_cast<Eigen::Index>(sector_indices[a])] = local[static_cast<Eigen::Index>(a)];
  }
  return out;
}

namespace {

struct Proposal {
  std::optional<CVector> trial;  // orthonormalized against the basis
  double cost = 0.0;
  int evals = 0;
  std::vector<double> theta;
  std::optional<opt::StochasticStudy> study;
};

Proposal propose_hea(const SubspaceState& s, const RunContext& ctx, const RunConfig& cfg) {
  const int nq = ctx.problem->h.n_qubits();
  const CostEvaluator ev(s, ctx.h_csr, cfg, cfg.project_trial_to_sector ? &ctx.sector_mask : nullptr);
  const auto entangler = cfg.trial.entangler;
  const int layers = cfg.trial.n_layers;
  auto factory = [&]() -> opt::Objective {
    auto sv = std::make_shared<circuit::StateVector>(nq);
    auto scratch = std::make_shared<CostEvaluator::Scratch>();
    auto circ = std::make_shared<circuit::HeaCircuit>();
    circ->n_qubits = nq;
    circ->n_layers = layers;
    circ->entangler = entangler;
    return [sv, scratch, circ, &ev](std::span<const double> x) {
      circ->params.assign(x.begin(), x.end());
      circuit::run_hea_into(*circ, *sv);
      return ev(sv->amplitudes(), *scratch);
    };
  };
  const int dim = circuit::HeaCircuit::param_count(nq, layers);
  const auto ms = opt::multi_start(factory, dim, cfg.optimizer);
  Proposal p;
  p.evals = ms.total_evals;
  p.theta = ms.best.x;
  p.cost = ms.best.f;
  p.study = ms.study;
  circuit::HeaCircuit circ{nq, layers, entangler, ms.best.x, std::nullopt};
  p.trial = ev.prepare(circuit::run_hea(circ).amplitudes());
  if (!p.trial) p.cost = 0.0;
  return p;
}

Proposal propose_exact(const SubspaceState& s, const RunContext& ctx, const RunConfig& cfg) {
  std::vector<CVector> local_basis;
  for (const auto& b : s.basis) local_basis.push_back(ctx.restrict(b));
  const CVector anchor =
      ctx.restrict(cfg.cost == CostKind::TriDiag ? s.basis.back() : s.ground_vector());
  const auto io = oracles::exact_interaction_optimum(ctx.h_dense, anchor, local_basis);
  Proposal p;
  p.evals = 1;
  if (io.eigenstate_reached) return p;
  CVector local = io.vector;
  p.cost = io.c_min;
  if (cfg.cost == CostKind::Gain) {
    oracles::ReflectionConfig rc;
    rc.seed = cfg.optimizer.seed;
    rc.start = io.vector;
    const auto res = oracles::minimize_reflection(oracles::ReflectionCost::Gain, ctx.h_dense, anchor,
                                                  local_basis, rc);
    local = res.vector;
    p.cost = res.c_star;
    p.evals = res.iterations;
  }
  const CVector full = ctx.embed(local);
  try {
    p.trial = orthogonalize_against(s.basis, full / full.norm());
  } catch (const LinearDependenceError&) {
    p.trial.reset();
    p.cost = 0.0;
  }
  return p;
}

Proposal propose(const SubspaceState& s, const RunContext& ctx, const RunConfig& cfg) {
  if (cfg.trial.kind == TrialSource::Kind::Hea) return propose_hea(s, ctx, cfg);
  return propose_exact(s, ctx, cfg);
}

void grow(SubspaceState& s, const RunContext& ctx, const CVector& t) {
  const CVector ht = apply(ctx.h_csr, t);
  const auto k = static_cast<Eigen::Index>(s.size());
  CMatrix h(k + 1, k + 1);
  h.topLeftCorner(k, k) = s.h_mat;
  for (Eigen::Index j = 0; j < k; ++j) {
    const Complex v = s.basis[static_cast<std::size_t>(j)].dot(ht);
    h(j, k) = v;
    h(k, j) = std::conj(v);
  }
  h(k, k) = t.dot(ht).real();
  s.h_mat = std::move(h);
  s.basis.push_back(t);
  s.h_basis.push_back(ht);
}

void finish_record(IterationRecord& rec, const SubspaceState& s, const RunContext& ctx) {
  rec.e0 = s.e0;
  rec.omega = s.omega;
  const CVector psi = s.ground_vector();
  const int n_orb = ctx.problem->h.n_qubits() / 2;
  const std::uint64_t alpha_mask = (std::uint64_t{1} << n_orb) - 1;
  double ne = 0.0, sz = 0.0;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    const double w = std::norm(psi[i]);
    if (w == 0.0) continue;
    const auto bits = static_cast<std::uint64_t>(i);
    const int na = std::popcount(bits & alpha_mask);
    const int nb = std::popcount(bits >> n_orb);
    ne += w * (na + nb);
    sz += w * 0.5 * (na - nb);
  }
  rec.n_expect = ne;
  rec.sz_expect = sz;
  if (ctx.fci) {
    rec.fidelity = std::norm(ctx.fci->ground_vector.amplitudes().dot(psi));
    rec.error = s.e0 - ctx.fci->e0;
  }
}

CVector extended(const CVector& c) {
  CVector out = CVector::Zero(c.size() + 1);
  out.head(c.size()) = c;
  return out;
}

}  // namespace

IterationRecord ivqe_step(SubspaceState& s, const RunContext& ctx, const RunConfig& cfg, int n) {
  IterationRecord rec;
  rec.n = n;
  auto p = propose(s, ctx, cfg);
  rec.cost = p.cost;
  rec.evals = p.evals;
  rec.theta = p.theta;
  rec.study = std::move(p.study);
  if (!p.trial || p.cost > -cfg.eps_e) {
    rec.accepted = false;
    finish_record(rec, s, ctx);
    return rec;
  }
  const CostEvaluator ev(s, ctx.h_csr, cfg, nullptr);
  CostEvaluator::Scratch scratch;
  const auto b = ev.block(*p.trial, scratch);
  const auto g = cost::two_level_ground(b);
  CVector c = extended(s.ground_coeffs) * g.omega;
  c[c.size() - 1] = g.trial_coefficient;
  grow(s, ctx, *p.trial);
  s.ground_coeffs = c;
  s.e0 = g.energy;
  s.omega = g.omega;
  rec.subspace_eigenvalues = {g.energy, b.h00 + b.h11 - g.energy};
  finish_record(rec, s, ctx);
  return rec;
}

IterationRecord vqsm_step(SubspaceState& s, const RunContext& ctx, const RunConfig& cfg, int n) {
  IterationRecord rec;
  rec.n = n;
  auto p = propose(s, ctx, cfg);
  rec.cost = p.cost;
  rec.evals = p.evals;
  rec.theta = p.theta;
  rec.study = std::move(p.study);
  if (!p.trial || p.cost > -cfg.eps_e) {
    rec.accepted = false;
    finish_record(rec, s, ctx);
    return rec;
  }
  const CVector prev = extended(s.ground_coeffs);
  grow(s, ctx, *p.trial);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (s.h_mat + s.h_mat.adjoint()));
  CVector c = es.eigenvectors().col(0);
  const Complex ov = prev.dot(c);
  if (std::abs(ov) > 0.0) c *= std::conj(ov) / std::abs(ov);
  s.ground_coeffs = c;
  s.e0 = es.eigenvalues()[0];
  s.omega = std::min(1.0, std::abs(ov));
  rec.subspace_eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  finish_record(rec, s, ctx);
  return rec;
}

ConvergenceReport run(const RunConfig& cfg, const Problem& p, bool attach_fci) {
  const auto ctx = RunContext::make(p, cfg, attach_fci);
  return run(cfg, ctx);
}

ConvergenceReport run(const RunConfig& cfg, const RunContext& ctx) {
  cfg.validate();
  ConvergenceReport rep;
  const auto& p = *ctx.problem;
  const CVector guess = circuit::determinant_state(p.guess).amplitudes();
  rep.e_reference = p.e_guess;
  if (ctx.fci) rep.e_fci = ctx.fci->e0;
  try {
    SubspaceState s = initial_state(ctx.h_csr, guess);
    for (int n = 1; n <= cfg.max_iterations; ++n) {
      auto rec = cfg.algorithm == Algorithm::IVQE ? ivqe_step(s, ctx, cfg, n) : vqsm_step(s, ctx, cfg, n);
      const bool accepted = rec.accepted;
      const double w2 = rec.omega * rec.omega;
      rep.records.push_back(std::move(rec));
      if (!accepted) {
        rep.status = RunStatus::Converged;
        rep.message = "cost above -eps_e";
        break;
      }
      if (w2 > 1.0 - cfg.eps_w) {
        rep.status = RunStatus::Converged;
        rep.message = "omega^2 above 1 - eps_w";
        break;
      }
      if (s.size() >= p.h.dim()) {
        rep.status = RunStatus::Converged;
        rep.message = "basis spans the register";
        break;
      }
    }
  } catch (const Error& e) {
    rep.status = RunStatus::Failed;
    rep.message = e.what();
  }
  if (rep.e_fci) {
    try {
      rep.rate = fit_rate(rep.errors());
    } catch (const FitError&) {
    }
  }
  return rep;
}

std::vector<double> ConvergenceReport::errors() const {
  std::vector<double> out;
  for (const auto& r : records)
    if (r.accepted && r.error >= -0.5) out.push_back(r.error);
  return out;
}

double fit_rate(const std::vector<double>& errors) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!(errors[i] >= 1e-10)) break;
    xs.push_back(static_cast<double>(i + 1));
    ys.push_back(std::log(errors[i]));
  }
  if (xs.size() < 3) throw FitError("need at least 3 errors above the numerical floor");
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) sx += xs[i], sy += ys[i];
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return std::exp(sxy / sxx);
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "converged";
    case RunStatus::MaxIterations: return "max-iterations";
    case RunStatus::Failed: return "failed";
  }
  return "unknown";
}

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["status"] = to_string(status);
  j["message"] = message;
  j["e_reference"] = e_reference;
  j["e_fci"] = e_fci ? nlohmann::json(*e_fci) : nlohmann::json(nullptr);
  j["rate"] = rate ? nlohmann::json(*rate) : nlohmann::json(nullptr);
  j["fidelity_definition"] = "|<Psi_FCI|Psi0^(n)>|^2";
  auto& it = j["iterations"] = nlohmann::json::array();
  for (const auto& r : records) {
    it.push_back({{"n", r.n},
                  {"E0", r.e0},
                  {"cost", r.cost},
                  {"omega", r.omega},
                  {"fidelity", r.fidelity},
                  {"error", r.error},
                  {"evals", r.evals},
                  {"accepted", r.accepted},
                  {"n_expect", r.n_expect},
                  {"sz_expect", r.sz_expect},
                  {"theta", r.theta}});
  }
  return j;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream os;
  os << "n,E0,cost,omega,fidelity,evals\n";
  for (const auto& r : records) {
    os << r.n << ',' << fmt(r.e0) << ',' << fmt(r.cost) << ',' << fmt(r.omega) << ','
       << fmt(r.fidelity) << ',' << r.evals << '\n';
  }
  return os.str();
}

std::string to_string(Algorithm a) { return a == Algorithm::IVQE ? "ivqe" : "vqsm"; }

std::string to_string(CostKind c) {
  switch (c) {
    case CostKind::Gain: return "gain";
    case CostKind::Interaction: return "interaction";
    case CostKind::TriDiag: return "tridiag";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "ivqe") return Algorithm::IVQE;
  if (s == "vqsm") return Algorithm::VQSM;
  throw DomainError("unknown algorithm '" + s + "'");
}

CostKind cost_from_string(const std::string& s) {
  if (s == "gain") return CostKind::Gain;
  if (s == "interaction") return CostKind::Interaction;
  if (s == "tridiag") return CostKind::TriDiag;
  throw DomainError("unknown cost '" + s + "'");
}

TrialSource trial_from_string(const std::string& s) {
  if (s == "exact") return TrialSource::exact();
  if (s == "hea") return TrialSource::hea(1);
  if (s.rfind("hea:", 0) == 0) {
    const std::string tail = s.substr(4);
    std::size_t used = 0;
    int layers = -1;
    try {
      layers = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tail.size() || layers < 0) throw DomainError("bad layer count in '" + s + "'");
    return TrialSource::hea(layers);
  }
  throw DomainError("unknown trial source '" + s + "'");
}

std::string to_string(const TrialSource& t) {
  return t.kind == TrialSource::Kind::ExactReflection ? "exact" : "hea:" + std::to_string(t.n_layers);
}

}  // namespace vqsm::engine
