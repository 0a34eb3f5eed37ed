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

// Serial reference vs OpenMP kernels on random states and operators.

#include <random>

#include <benchmark/benchmark.h>

#include "vqsm/kernels/kernels.hpp"

using namespace vqsm;
using namespace vqsm::kernels;

namespace {

std::vector<Complex> random_state(std::size_t dim) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> nd;
  std::vector<Complex> v(dim);
  for (auto& z : v) z = {nd(rng), nd(rng)};
  return v;
}

std::vector<PauliTerm> random_terms(int n, int count) {
  std::mt19937_64 rng(2);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<PauliTerm> t;
  for (int k = 0; k < count; ++k) t.push_back({rng() & mask, rng() & mask, Complex(0.1 * k, 0.0)});
  return t;
}

template <auto Fn>
void BM_PauliTerms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto terms = random_terms(n, 64);
  const auto in = random_state(std::size_t{1} << n);
  std::vector<Complex> out(in.size());
  for (auto _ : state) {
    Fn(terms, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.size() * terms.size()));
}

template <auto Fn>
void BM_CsrMatvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto csr = build_csr(random_terms(n, 64), Complex(0.5, 0.0), std::size_t{1} << n);
  const auto in = random_state(csr.dim);
  std::vector<Complex> out(in.size());
  for (auto _ : state) {
    Fn(csr, in, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(csr.nnz()));
}

template <auto Ry, auto Cnot>
void BM_GateLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amp = random_state(std::size_t{1} << n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) Ry(amp, q, 0.1 * q);
    for (int q = 0; q + 1 < n; ++q) Cnot(amp, q, q + 1);
    benchmark::DoNotOptimize(amp.data());
  }
}

template <auto Fn>
void BM_Dot(benchmark::State& state) {
  const auto a = random_state(std::size_t{1} << state.range(0));
  const auto b = random_state(a.size());
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
}

}  // namespace

BENCHMARK(BM_PauliTerms<serial::apply_pauli_terms>)->Name("pauli_terms/serial")->DenseRange(10, 16, 3);
BENCHMARK(BM_PauliTerms<omp::apply_pauli_terms>)->Name("pauli_terms/omp")->DenseRange(10, 16, 3);
BENCHMARK(BM_CsrMatvec<serial::csr_matvec>)->Name("csr_matvec/serial")->DenseRange(10, 16, 3);
BENCHMARK(BM_CsrMatvec<omp::csr_matvec>)->Name("csr_matvec/omp")->DenseRange(10, 16, 3);
BENCHMARK(BM_GateLayer<serial::apply_ry, serial::apply_cnot>)->Name("hea_layer/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_GateLayer<omp::apply_ry, omp::apply_cnot>)->Name("hea_layer/omp")->DenseRange(10, 20, 5);
BENCHMARK(BM_Dot<serial::dot>)->Name("dot/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_Dot<omp::dot>)->Name("dot/omp")->DenseRange(10, 20, 5);

BENCHMARK_MAIN();
