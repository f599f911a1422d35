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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gslab/bit_matrix.hpp"
#include "gslab/clifford.hpp"
#include "gslab/graph.hpp"
#include "gslab/limits.hpp"
#include "gslab/stabilizer.hpp"
#include "gslab/state_vector.hpp"

namespace gslab {

enum class TraceOpKind {
  RowSwap,   // swap generators a and b
  RowMul,    // generator a <- generator a * generator b
  Permute,   // qubit relabeling; perm[new position] = old position
  Gate,      // single-qubit gate at position a (current labeling)
  StageMark, // end of stage a (1..4)
};

struct TraceOp {
  TraceOpKind kind = TraceOpKind::RowSwap;
  std::size_t a = 0;
  std::size_t b = 0;
  Gate gate = Gate::I;
  std::vector<std::size_t> perm;
  friend bool operator==(const TraceOp&, const TraceOp&) = default;
};

struct ReductionTrace {
  /// Stage 1: X block in reduced echelon form, pivot qubits moved first.
  /// Stage 2: Z columns of the non-pivot qubits cleared from the upper rows.
  /// Stage 3: Hadamards on the non-pivot qubits, X block is the identity.
  /// Stage 4: diagonal and signs cleared, [I | Gamma].
  std::array<CheckMatrix, 4> stages;
  std::vector<TraceOp> ops;
  /// X-block rank of the input.
  std::size_t r = 0;
  /// position -> original qubit.
  std::vector<std::size_t> permutation;
};

struct Reduction {
  /// Graph on the original qubit labels.
  Graph graph;
  ReductionTrace trace;
  /// Local gates on the original qubits taking the input stabilizer to graph_check_matrix(graph).
  std::vector<LocalGate> local_gates;
};

Reduction reduce_to_graph(const CheckMatrix& c, const Limits& limits = {});

/// The graph of reduce_to_graph without the state-vector cross-check.
Graph graph_form(const CheckMatrix& c);

/// Re-applies every op of the trace to c and returns the four stages.
std::array<CheckMatrix, 4> replay_trace(const CheckMatrix& c, const ReductionTrace& trace);

std::size_t support_rank(const CheckMatrix& c);

/// Minimum of support_rank over the labeled LC orbit's graph states.
std::size_t min_support_rank_over_orbit(const Graph& g, const Limits& limits = {});

struct StabilizerDecomposition {
  std::size_t n = 0;
  /// Support is offset + span(subspace_basis).
  BitVector offset;
  /// Reduced echelon basis; coordinates of a member are its bits at the pivots.
  std::vector<BitVector> subspace_basis;
  std::vector<std::size_t> pivots;
  /// i-power per pivot coordinate.
  BitVector linear_l;
  /// Symmetric sign form on pivot coordinates; the diagonal carries linear sign terms.
  BitMatrix quadratic_q;
  std::complex<double> global_phase{1.0, 0.0};
};

StabilizerDecomposition decompose_state(const CheckMatrix& c, const Limits& limits = {});
Amplitudes reconstruct_amplitudes(const StabilizerDecomposition& d);

struct RankRelationReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t w = 0;
  std::size_t support_subgroup_order = 0;
  std::size_t schmidt_rank = 0;
  std::size_t rank_xor = 0;
  std::size_t rank_rational = 0;
  std::optional<std::size_t> bp;
  bool minus_sign_relation = false;   // k = n - log2(2^(n-1) - w) - 1
  bool subgroup_relation = false;     // |S_R| = 2^r - 2^-(n-r-1) w
  bool bp_bounds = false;             // r - log2|S_R| <= bp <= r
  bool rank_chain = false;            // rank_xor <= rank_rational <= bp <= r
  bool rational_equals_bp = false;
  bool all_hold() const { return minus_sign_relation && subgroup_relation && bp_bounds; }
};

/// R must be one side of a bipartition of g.
RankRelationReport verify_rank_relations(const Graph& g, std::span<const std::size_t> region,
                                         const Limits& limits = {});

}  // namespace gslab
