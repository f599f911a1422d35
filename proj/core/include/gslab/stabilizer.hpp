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
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/bit_matrix.hpp"
#include "gslab/clifford.hpp"
#include "gslab/graph.hpp"
#include "gslab/limits.hpp"
#include "gslab/pauli.hpp"

namespace gslab {

/// Generators of an n-qubit stabilizer state: n Hermitian, pairwise
/// commuting Pauli elements that are independent over GF(2). The
/// constructor rejects anything else with MalformedCheckMatrix.
class CheckMatrix {
 public:
  CheckMatrix() = default;
  CheckMatrix(std::size_t n, std::vector<PauliElement> rows);

  /// One generator per string, e.g. {"+XZ", "+ZX"}.
  static CheckMatrix from_strings(std::span<const std::string> rows);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliElement>& rows() const { return rows_; }
  const PauliElement& row(std::size_t i) const { return rows_[i]; }

  BitMatrix x_block() const;
  BitMatrix z_block() const;
  /// n x 2n matrix [X | Z].
  BitMatrix symplectic() const;

  friend bool operator==(const CheckMatrix&, const CheckMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PauliElement> rows_;
};

/// Reduced row-echelon generators (pivots over x_0..x_{n-1}, z_0..z_{n-1})
/// with exact phases. Two check matrices stabilize the same state iff their
/// canonical generators are equal.
std::vector<PauliElement> canonical_generators(const CheckMatrix& c);
bool same_stabilizer(const CheckMatrix& a, const CheckMatrix& b);

/// Every element of the group generated by a check matrix. elements[s] is
/// the product of the generators whose bits are set in s.
class StabilizerGroup {
 public:
  StabilizerGroup(std::size_t n, std::vector<PauliElement> elements)
      : n_(n), elements_(std::move(elements)) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PauliElement>& elements() const { return elements_; }

  /// Set equality, including phases.
  bool same_elements(const StabilizerGroup& other) const;

 private:
  std::size_t n_;
  std::vector<PauliElement> elements_;
};

/// Row a is K_a = X_a Z_{N(a)} with phase +1.
CheckMatrix graph_check_matrix(const Graph& g);

StabilizerGroup enumerate_stabilizer(const CheckMatrix& c, const Limits& limits = {});

/// Minimum weight over non-identity elements.
std::size_t distance(const CheckMatrix& c, const Limits& limits = {});

/// Elements whose support has no proper non-empty sub-support among the
/// stabilizer's supports.
std::vector<PauliElement> minimal_elements(const CheckMatrix& c, const Limits& limits = {});
/// Subgroup generated by the minimal elements.
StabilizerGroup minimal_subgroup(const CheckMatrix& c, const Limits& limits = {});

/// Minimal Support Condition: X, Y and Z each occur on every qubit within
/// the minimal subgroup. The state must not factor into a product; throws
/// DisconnectedGraph otherwise.
bool check_msc(const CheckMatrix& c, const Limits& limits = {});
bool check_msc(const Graph& g, const Limits& limits = {});

/// Elements with support inside 'region' (always includes the identity).
StabilizerGroup support_subgroup(const CheckMatrix& c, std::span<const std::size_t> region,
                                 const Limits& limits = {});

/// |R| - log2 |S_R|. Throws InvalidPartition unless 0 < |R| < n.
std::size_t schmidt_rank(const CheckMatrix& c, std::span<const std::size_t> region, const Limits& limits = {});
std::size_t schmidt_rank(const Graph& g, std::span<const std::size_t> region, const Limits& limits = {});

/// Rank over GF(2) of the adjacency block between region and its complement.
std::size_t cut_rank(const Graph& g, std::span<const std::size_t> region);

/// Conjugates every generator by 'gate' acting on qubit q.
CheckMatrix apply_single_qubit_clifford(const CheckMatrix& c, std::size_t qubit, Gate gate);
CheckMatrix apply_local_cliffords(const CheckMatrix& c, std::span<const LocalGate> gates);

/// The local Clifford realizing local complementation at a:
/// SqrtX (exp(-i pi/4 X)) on a and Sdg (exp(+i pi/4 Z)) on each neighbour.
std::vector<LocalGate> lc_gates(const Graph& g, Vertex a);

/// Qubit blocks of the finest tensor-product factorization of the state.
std::vector<std::vector<std::size_t>> product_factors(const CheckMatrix& c);

/// One generator per line in the "+XZZ" form.
std::string to_stabilizer_text(const CheckMatrix& c);
CheckMatrix parse_stabilizer_text(std::string_view text);

}  // namespace gslab
