// Copyright 2026 The gslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "gslab/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "gslab/errors.hpp"
#include "gslab/gf2.hpp"
#include "gslab/stabilizer.hpp"

namespace gslab {

namespace {

constexpr std::size_t kMaxDenseQubits = 30;

void check_dense(std::size_t n, const Limits& limits) {
  if (n > limits.statevec || n > kMaxDenseQubits) {
    throw ResourceLimit("state vectors limited to " + std::to_string(limits.statevec) + " qubits, got " +
                        std::to_string(n));
  }
}

std::uint64_t low_word(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// psi <- (psi + p psi) / 2
void project(Amplitudes& psi, const PauliElement& p) {
  const std::uint64_t x = low_word(p.xbits());
  const std::uint64_t z = low_word(p.zbits());
  const unsigned k = (p.phase() + static_cast<unsigned>(std::popcount(x & z))) & 3u;
  Amplitudes out = psi;
  for (std::uint64_t b = 0; b < psi.size(); ++b) {
    if (psi[b] == 0.0) continue;
    const double sign = (std::popcount(z & b) & 1) ? -1.0 : 1.0;
    out[b ^ x] += kIPow[k] * sign * psi[b];
  }
  for (auto& a : out) a *= 0.5;
  psi = std::move(out);
}

void normalize(Amplitudes& psi) {
  double norm = 0;
  for (const auto& a : psi) norm += std::norm(a);
  norm = std::sqrt(norm);
  for (auto& a : psi) a /= norm;
  for (const auto& a : psi) {
    if (std::abs(a) > 1e-9) {
      const auto phase = std::conj(a) / std::abs(a);
      for (auto& b : psi) b *= phase;
      break;
    }
  }
}

}  // namespace

Amplitudes graph_state_vector(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  check_dense(n, limits);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::uint64_t> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = low_word(g.neighbors(v));
  Amplitudes psi(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::size_t twice = 0;
    for (std::uint64_t rest = x; rest; rest &= rest - 1) {
      twice += static_cast<std::size_t>(std::popcount(nbr[std::countr_zero(rest)] & x));
    }
    psi[x] = ((twice / 2) & 1u) ? -amp : amp;
  }
  return psi;
}

Amplitudes state_vector(const CheckMatrix& c, const Limits& limits) {
  const std::size_t n = c.num_qubits();
  check_dense(n, limits);
  const auto gens = canonical_generators(c);
  // Diagonal generators fix the computational-basis parities of the support.
  std::vector<const PauliElement*> diagonal;
  for (const auto& g : gens) {
    if (g.xbits().none()) diagonal.push_back(&g);
  }
  BitMatrix system(diagonal.size(), n + 1);
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (auto q : diagonal[i]->zbits().indices()) system.set(i, q);
    system.set(i, n, diagonal[i]->is_negative());
  }
  const auto ech = row_echelon(system);
  std::uint64_t x0 = 0;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    if (ech.pivot_cols[i] == n) throw MalformedCheckMatrix("inconsistent diagonal generators");
    if (ech.reduced.get(i, n)) x0 |= std::uint64_t{1} << ech.pivot_cols[i];
  }
  Amplitudes psi(std::size_t{1} << n, 0.0);
  psi[x0] = 1.0;
  for (const auto& g : gens) project(psi, g);
  normalize(psi);
  return psi;
}

std::size_t minus_sign_count(const Graph& g, const Limits& limits) {
  const auto psi = graph_state_vector(g, limits);
  return static_cast<std::size_t>(std::count_if(psi.begin(), psi.end(), [](const auto& a) { return a.real() < 0; }));
}

void apply_gate(Amplitudes& psi, std::size_t qubit, Gate gate) {
  const auto m = gate_matrix(gate);
  const std::size_t bit = std::size_t{1} << qubit;
  if (bit >= psi.size()) throw VertexOutOfRange("qubit " + std::to_string(qubit) + " out of range");
  for (std::size_t b = 0; b < psi.size(); ++b) {
    if (b & bit) continue;
    const auto a0 = psi[b];
    const auto a1 = psi[b | bit];
    psi[b] = m[0] * a0 + m[1] * a1;
    psi[b | bit] = m[2] * a0 + m[3] * a1;
  }
}

double max_abs_diff(const Amplitudes& a, const Amplitudes& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double max_abs_diff_up_to_phase(const Amplitudes& a, const Amplitudes& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::complex<double> overlap = 0;
  for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(b[i]) * a[i];
  if (std::abs(overlap) < 1e-300) return max_abs_diff(a, b);
  const auto phase = overlap / std::abs(overlap);
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - phase * b[i]));
  return d;
}

}  // namespace gslab
