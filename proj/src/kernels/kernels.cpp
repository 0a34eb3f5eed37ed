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

#include "vqsm/kernels/kernels.hpp"

#include <bit>
#include <cmath>
#include <map>

#include <omp.h>

namespace vqsm::kernels {

namespace {

inline double parity_sign(std::uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

constexpr std::size_t kDotBlock = 1024;

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw PreconditionError("kernel operand size mismatch");
}

}  // namespace

CsrMatrix build_csr(std::span<const PauliTerm> terms, Complex constant, std::size_t dim) {
  // Group terms by x mask: each group contributes exactly one column per row.
  std::map<std::uint64_t, std::vector<const PauliTerm*>> groups;
  for (const auto& t : terms) groups[t.x].push_back(&t);

  CsrMatrix m;
  m.dim = dim;
  m.row_ptr.reserve(dim + 1);
  m.row_ptr.push_back(0);
  std::vector<std::pair<std::uint32_t, Complex>> row;
  for (std::size_t i = 0; i < dim; ++i) {
    row.clear();
    if (constant != Complex{}) row.emplace_back(static_cast<std::uint32_t>(i), constant);
    for (const auto& [x, members] : groups) {
      const std::size_t j = i ^ x;
      Complex v{};
      for (const auto* t : members) v += t->coeff * parity_sign(t->z & j);
      if (x == 0 && !row.empty() && row.front().first == i) {
        row.front().second += v;
      } else if (v != Complex{}) {
        row.emplace_back(static_cast<std::uint32_t>(j), v);
      }
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, v] : row) {
      if (std::abs(v) <= 1e-14) continue;
      m.col.push_back(c);
      m.val.push_back(v);
    }
    m.row_ptr.push_back(m.val.size());
  }
  return m;
}

namespace serial {

void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out) {
  check_sizes(in.size(), out.size());
  const std::size_t dim = in.size();
  for (std::size_t i = 0; i < dim; ++i) out[i] = 0.0;
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t j = i ^ t.x;
      out[i] += t.coeff * parity_sign(t.z & j) * in[j];
    }
  }
}

void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out) {
  check_sizes(in.size(), a.dim);
  check_sizes(out.size(), a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Complex acc{};
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) acc += a.val[k] * in[a.col[k]];
    out[i] = acc;
  }
}

void apply_ry(std::span<Complex> amp, int qubit, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::size_t bit = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = amp[i];
    const Complex a1 = amp[i | bit];
    amp[i] = c * a0 - s * a1;
    amp[i | bit] = s * a0 + c * a1;
  }
}

void apply_cnot(std::span<Complex> amp, int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(amp[i], amp[i | tb]);
  }
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  check_sizes(a.size(), b.size());
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace serial

namespace omp {

void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out) {
  check_sizes(in.size(), out.size());
  const auto dim = static_cast<std::int64_t>(in.size());
  // Each output amplitude is owned by one thread and accumulates terms in
  // the same order as the serial kernel.
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < dim; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex acc{};
    for (const auto& t : terms) {
      const std::size_t j = i ^ t.x;
      acc += t.coeff * parity_sign(t.z & j) * in[j];
    }
    out[i] = acc;
  }
}

void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out) {
  check_sizes(in.size(), a.dim);
  check_sizes(out.size(), a.dim);
  const auto dim = static_cast<std::int64_t>(a.dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t ii = 0; ii < dim; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    Complex acc{};
    for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) acc += a.val[k] * in[a.col[k]];
    out[i] = acc;
  }
}

void apply_ry(std::span<Complex> amp, int qubit, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const std::size_t bit = std::size_t{1} << qubit;
  const auto half = static_cast<std::int64_t>(amp.size() / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t kk = 0; kk < half; ++kk) {
    // Insert a zero at the target bit position to enumerate pair heads.
    const auto k = static_cast<std::size_t>(kk);
    const std::size_t i = ((k & ~(bit - 1)) << 1) | (k & (bit - 1));
    const Complex a0 = amp[i];
    const Complex a1 = amp[i | bit];
    amp[i] = c * a0 - s * a1;
    amp[i | bit] = s * a0 + c * a1;
  }
}

void apply_cnot(std::span<Complex> amp, int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  const auto half = static_cast<std::int64_t>(amp.size() / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t kk = 0; kk < half; ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    const std::size_t i = ((k & ~(tb - 1)) << 1) | (k & (tb - 1));
    if (i & cb) std::swap(amp[i], amp[i | tb]);
  }
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  check_sizes(a.size(), b.size());
  const std::size_t n_blocks = (a.size() + kDotBlock - 1) / kDotBlock;
  std::vector<Complex> partial(n_blocks);
#pragma omp parallel for schedule(static)
  for (std::int64_t bb = 0; bb < static_cast<std::int64_t>(n_blocks); ++bb) {
    const auto blk = static_cast<std::size_t>(bb);
    const std::size_t lo = blk * kDotBlock;
    const std::size_t hi = std::min(a.size(), lo + kDotBlock);
    Complex acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += std::conj(a[i]) * b[i];
    partial[blk] = acc;
  }
  Complex total{};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace omp

void apply_pauli_terms(std::span<const PauliTerm> terms, std::span<const Complex> in,
                       std::span<Complex> out) {
  if (in.size() >= kParallelThreshold) return omp::apply_pauli_terms(terms, in, out);
  serial::apply_pauli_terms(terms, in, out);
}

void csr_matvec(const CsrMatrix& a, std::span<const Complex> in, std::span<Complex> out) {
  if (a.dim >= kParallelThreshold) return omp::csr_matvec(a, in, out);
  serial::csr_matvec(a, in, out);
}

void apply_ry(std::span<Complex> amp, int qubit, double angle) {
  if (amp.size() >= kParallelThreshold) return omp::apply_ry(amp, qubit, angle);
  serial::apply_ry(amp, qubit, angle);
}

void apply_cnot(std::span<Complex> amp, int control, int target) {
  if (amp.size() >= kParallelThreshold) return omp::apply_cnot(amp, control, target);
  serial::apply_cnot(amp, control, target);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() >= kParallelThreshold) return omp::dot(a, b);
  return serial::dot(a, b);
}

}  // namespace vqsm::kernels
