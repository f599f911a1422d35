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
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "gslab/errors.hpp"
#include "gslab/reduction.hpp"

namespace gslab {

namespace {

constexpr double kZero = 1e-9;
constexpr double kFitTolerance = 1e-12;

std::uint64_t low_word(const BitVector& v) { return v.words().empty() ? 0 : v.words()[0]; }

// Exponent k with value ~ i^k * magnitude, or -1 if value is not on an axis.
int axis_exponent(std::complex<double> value) {
  const double m = std::abs(value);
  const std::complex<double> unit = value / m;
  constexpr double kAxis = 1e-6;
  if (std::abs(unit - std::complex<double>(1, 0)) < kAxis) return 0;
  if (std::abs(unit - std::complex<double>(0, 1)) < kAxis) return 1;
  if (std::abs(unit - std::complex<double>(-1, 0)) < kAxis) return 2;
  if (std::abs(unit - std::complex<double>(0, -1)) < kAxis) return 3;
  return -1;
}

// Reduces x against the echelon basis; returns the residue and the coordinate mask.
std::pair<std::uint64_t, std::uint64_t> reduce_against(std::uint64_t x, const std::vector<std::uint64_t>& basis,
                                                       const std::vector<std::size_t>& pivots) {
  std::uint64_t coords = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if ((x >> pivots[j]) & 1u) {
      x ^= basis[j];
      coords |= std::uint64_t{1} << j;
    }
  }
  return {x, coords};
}

}  // namespace

StabilizerDecomposition decompose_state(const CheckMatrix& c, const Limits& limits) {
  const std::size_t n = c.num_qubits();
  const Amplitudes psi = state_vector(c, limits);

  std::vector<std::uint64_t> support;
  for (std::uint64_t x = 0; x < psi.size(); ++x) {
    if (std::abs(psi[x]) > kZero) support.push_back(x);
  }
  if (support.empty()) throw FitFailure("state has no support");
  const std::uint64_t offset = support.front();

  // First independent shifted support vectors, kept in reduced echelon form.
  std::vector<std::uint64_t> basis;
  std::vector<std::size_t> pivots;
  for (auto x : support) {
    const std::uint64_t rest = reduce_against(x ^ offset, basis, pivots).first;
    if (rest == 0) continue;
    const auto pivot = static_cast<std::size_t>(std::countr_zero(rest));
    for (auto& b : basis) {
      if ((b >> pivot) & 1u) b ^= rest;
    }
    basis.push_back(rest);
    pivots.push_back(pivot);
  }
  const std::size_t d = basis.size();
  if (support.size() != (std::size_t{1} << d)) throw FitFailure("support is not an affine subspace");
  for (auto x : support) {
    if (reduce_against(x ^ offset, basis, pivots).first != 0) throw FitFailure("support is not an affine subspace");
  }

  StabilizerDecomposition dec;
  dec.n = n;
  dec.offset = BitVector(n);
  for (std::size_t q = 0; q < n; ++q) dec.offset.set(q, (offset >> q) & 1u);
  dec.linear_l = BitVector(n);
  dec.quadratic_q = BitMatrix(n, n);
  dec.global_phase = psi[offset] / std::abs(psi[offset]);

  auto exponent_at = [&](std::uint64_t coords) {
    std::uint64_t x = offset;
    for (std::size_t j = 0; j < d; ++j) {
      if ((coords >> j) & 1u) x ^= basis[j];
    }
    const int e = axis_exponent(psi[x] / dec.global_phase);
    if (e < 0) throw FitFailure("amplitude is not a power of i times the global phase");
    return e;
  };

  std::vector<int> diag(d);
  for (std::size_t j = 0; j < d; ++j) {
    const int e = exponent_at(std::uint64_t{1} << j);
    const int l = e & 1;
    diag[j] = ((e - l) / 2) & 1;
    dec.linear_l.set(pivots[j], l);
    dec.quadratic_q.set(pivots[j], pivots[j], diag[j]);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      const int e = exponent_at((std::uint64_t{1} << j) | (std::uint64_t{1} << k));
      const int linear = static_cast<int>(dec.linear_l.get(pivots[j])) + static_cast<int>(dec.linear_l.get(pivots[k])) +
                         2 * (diag[j] + diag[k]);
      const int rest = ((e - linear) % 4 + 4) % 4;
      if (rest & 1) throw FitFailure("pairwise phase is not a sign");
      const bool bit = rest == 2;
      dec.quadratic_q.set(pivots[j], pivots[k], bit);
      dec.quadratic_q.set(pivots[k], pivots[j], bit);
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    BitVector b(n);
    for (std::size_t q = 0; q < n; ++q) b.set(q, (basis[j] >> q) & 1u);
    dec.subspace_basis.push_back(std::move(b));
  }
  dec.pivots = pivots;

  const Amplitudes rebuilt = reconstruct_amplitudes(dec);
  if (max_abs_diff(rebuilt, psi) > kFitTolerance) throw FitFailure("decomposition does not reproduce the state");
  return dec;
}

Amplitudes reconstruct_amplitudes(const StabilizerDecomposition& d) {
  const std::size_t dim = std::size_t{1} << d.n;
  std::vector<std::uint64_t> basis;
  for (const auto& b : d.subspace_basis) basis.push_back(low_word(b));
  const std::uint64_t offset = low_word(d.offset);
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << basis.size()));
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

  Amplitudes psi(dim, 0.0);
  for (std::uint64_t x = 0; x < dim; ++x) {
    auto [rest, coords] = reduce_against(x ^ offset, basis, d.pivots);
    if (rest != 0) continue;
    int e = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!((coords >> j) & 1u)) continue;
      e += d.linear_l.get(d.pivots[j]) ? 1 : 0;
      for (std::size_t k = j; k < basis.size(); ++k) {
        if (((coords >> k) & 1u) && d.quadratic_q.get(d.pivots[j], d.pivots[k])) e += 2;
      }
    }
    psi[x] = d.global_phase * magnitude * ipow[e & 3];
  }
  return psi;
}

}  // namespace gslab
