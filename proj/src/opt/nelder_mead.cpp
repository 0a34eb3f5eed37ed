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

#include "vqsm/opt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <omp.h>

#include "vqsm/common.hpp"

namespace vqsm::opt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Counted {
 public:
  Counted(const Objective& f, int budget) : f_(f), budget_(budget) {}
  bool exhausted() const { return evals_ >= budget_; }
  int evals() const { return evals_; }
  double operator()(const std::vector<double>& x) {
    ++evals_;
    double v;
    try {
      v = f_(std::span<const double>(x));
    } catch (const Error&) {
      v = kInf;
    }
    if (std::isnan(v)) v = kInf;
    if (v < best_f_) {
      best_f_ = v;
      best_x_ = x;
    }
    return v;
  }
  double best_f() const { return best_f_; }
  const std::vector<double>& best_x() const { return best_x_; }

 private:
  const Objective& f_;
  int budget_;
  int evals_ = 0;
  double best_f_ = kInf;
  std::vector<double> best_x_;
};

// One simplex run from x0; returns true when stopped by tolerances.
bool simplex_run(Counted& f, const std::vector<double>& x0, const OptimizerConfig& cfg) {
  const std::size_t n = x0.size();
  const double dn = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / dn;
  const double gamma = 0.75 - 1.0 / (2.0 * dn);
  const double delta = 1.0 - 1.0 / dn;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += cfg.initial_step;
  for (std::size_t i = 0; i <= n; ++i) {
    if (f.exhausted()) return false;
    fv[i] = f(pts[i]);
  }
  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  while (!f.exhausted()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double fspread = 0.0, xspread = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (std::isfinite(fv[i]) && std::isfinite(fv[best])) {
        fspread = std::max(fspread, std::abs(fv[i] - fv[best]));
      } else if (i != best) {
        fspread = kInf;
      }
      for (std::size_t k = 0; k < n; ++k) xspread = std::max(xspread, std::abs(pts[i][k] - pts[best][k]));
    }
    if (fspread <= cfg.ftol && xspread <= cfg.xtol) return true;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / dn;
    }
    for (std::size_t k = 0; k < n; ++k) xr[k] = centroid[k] + alpha * (centroid[k] - pts[worst][k]);
    const double fr = f(xr);
    if (fr < fv[best]) {
      if (f.exhausted()) {
        pts[worst] = xr, fv[worst] = fr;
        break;
      }
      for (std::size_t k = 0; k < n; ++k) xe[k] = centroid[k] + beta * (xr[k] - centroid[k]);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = xe, fv[worst] = fe;
      } else {
        pts[worst] = xr, fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = xr, fv[worst] = fr;
      continue;
    }
    if (f.exhausted()) break;
    const bool outside = fr < fv[worst];
    for (std::size_t k = 0; k < n; ++k) {
      xc[k] = outside ? centroid[k] + gamma * (xr[k] - centroid[k])
                      : centroid[k] - gamma * (centroid[k] - pts[worst][k]);
    }
    const double fc = f(xc);
    if (fc < (outside ? fr : fv[worst])) {
      pts[worst] = xc, fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= n && !f.exhausted(); ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + delta * (pts[i][k] - pts[best][k]);
      fv[i] = f(pts[i]);
    }
  }
  return false;
}

}  // namespace

MinimizeResult minimize(const Objective& f, std::vector<double> x0, const OptimizerConfig& cfg) {
  if (cfg.max_evals <= 0) throw DomainError("max_evals must be positive");
  if (x0.empty()) throw DomainError("empty parameter vector");
  Counted counted(f, cfg.max_evals);
  std::vector<double> start = std::move(x0);
  for (int round = 0; round <= cfg.local_restarts && !counted.exhausted(); ++round) {
    const double before = counted.best_f();
    const bool stopped = simplex_run(counted, start, cfg);
    if (!stopped) break;
    start = counted.best_x();
    if (round > 0 && !(counted.best_f() < before - cfg.ftol)) break;
  }
  MinimizeResult r;
  r.evals = counted.evals();
  r.x = counted.best_x();
  r.f = counted.best_f();
  r.budget_exhausted = counted.exhausted();
  if (r.x.empty()) r.x = start;
  return r;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw DomainError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

void StochasticStudy::summarize(double reference) {
  c_min = reference;
  std::vector<double> gaps;
  for (double s : samples) gaps.push_back(s - reference);
  q10 = quantile(gaps, 0.10);
  q25 = quantile(gaps, 0.25);
  q50 = quantile(gaps, 0.50);
  q75 = quantile(gaps, 0.75);
}

std::string StochasticStudy::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "sample,seed,final_cost,gap_to_cmin\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << i << ',' << seeds[i] << ',' << samples[i] << ',' << samples[i] - c_min << '\n';
  }
  return os.str();
}

std::uint64_t restart_seed(std::uint64_t base, int r) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MultiStartResult multi_start(const ObjectiveFactory& factory, int dim, const OptimizerConfig& cfg,
                             std::optional<std::vector<double>> first_start) {
  if (cfg.restarts < 1) throw DomainError("restarts must be >= 1");
  if (dim < 1) throw DomainError("dimension must be >= 1");
  MultiStartResult out;
  out.runs.resize(static_cast<std::size_t>(cfg.restarts));
  out.study.seeds.resize(out.runs.size());
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    const Objective f = factory();
#pragma omp for schedule(dynamic, 1)
    for (int r = 0; r < cfg.restarts; ++r) {
      const std::uint64_t seed = restart_seed(cfg.seed, r);
      std::vector<double> x0(static_cast<std::size_t>(dim), 0.0);
      if (r == 0 && first_start) {
        x0 = *first_start;
      } else if (cfg.init == InitKind::UniformRandom) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
        for (auto& v : x0) v = u(rng);
      }
      out.runs[static_cast<std::size_t>(r)] = minimize(f, std::move(x0), cfg);
      out.study.seeds[static_cast<std::size_t>(r)] = seed;
    }
  }

  std::size_t best = 0;
  for (std::size_t r = 0; r < out.runs.size(); ++r) {
    out.total_evals += out.runs[r].evals;
    out.study.samples.push_back(out.runs[r].f);
    if (out.runs[r].f < out.runs[best].f) best = r;
  }
  out.best = out.runs[best];
  out.study.summarize(out.best.f);
  return out;
}

}  // namespace vqsm::opt
