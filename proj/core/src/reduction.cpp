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
#include "gslab/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "gslab/errors.hpp"
#include "gslab/gf2.hpp"
#include "gslab/lc.hpp"

namespace gslab {

namespace {

PauliElement permute_qubits(const PauliElement& p, const std::vector<std::size_t>& perm) {
  BitVector x(perm.size());
  BitVector z(perm.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) {
    x.set(pos, p.xbits().get(perm[pos]));
    z.set(pos, p.zbits().get(perm[pos]));
  }
  return PauliElement(std::move(x), std::move(z), p.phase());
}

TraceOp make_op(TraceOpKind kind, std::size_t a, std::size_t b = 0, Gate gate = Gate::I,
                std::vector<std::size_t> perm = {}) {
  TraceOp op;
  op.kind = kind;
  op.a = a;
  op.b = b;
  op.gate = gate;
  op.perm = std::move(perm);
  return op;
}

void apply_op(std::vector<PauliElement>& rows, const TraceOp& op) {
  switch (op.kind) {
    case TraceOpKind::RowSwap:
      std::swap(rows[op.a], rows[op.b]);
      break;
    case TraceOpKind::RowMul:
      rows[op.a] *= rows[op.b];
      break;
    case TraceOpKind::Permute:
      for (auto& r : rows) r = permute_qubits(r, op.perm);
      break;
    case TraceOpKind::Gate:
      for (auto& r : rows) conjugate_in_place(r, op.a, op.gate);
      break;
    case TraceOpKind::StageMark:
      break;
  }
}

class Reducer {
 public:
  explicit Reducer(const CheckMatrix& c) : n_(c.num_qubits()), rows_(c.rows()) {}

  ReductionTrace run() {
    ReductionTrace trace;
    trace.permutation.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) trace.permutation[i] = i;

    // Stage 1: reduced echelon form of the X block, pivot qubits first.
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n_ && pivots.size() < n_; ++col) {
      const std::size_t top = pivots.size();
      std::size_t r = top;
      while (r < n_ && !rows_[r].xbits().get(col)) ++r;
      if (r == n_) continue;
      if (r != top) emit(make_op(TraceOpKind::RowSwap, top, r));
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != top && rows_[k].xbits().get(col)) emit(make_op(TraceOpKind::RowMul, k, top));
      }
      pivots.push_back(col);
    }
    const std::size_t r = pivots.size();
    trace.r = r;
    std::vector<std::size_t> perm = pivots;
    for (std::size_t col = 0; col < n_; ++col) {
      if (!std::binary_search(pivots.begin(), pivots.end(), col)) perm.push_back(col);
    }
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) identity = identity && perm[i] == i;
    if (!identity) {
      emit(make_op(TraceOpKind::Permute, 0, 0, Gate::I, perm));
      trace.permutation = perm;
    }
    mark(trace, 1);

    // Stage 2: the lower rows' Z block on the non-pivot qubits is invertible; make it the identity
    // and use it to clear the same columns from the upper rows.
    for (std::size_t j = r; j < n_; ++j) {
      std::size_t k = j;
      while (k < n_ && !rows_[k].zbits().get(j)) ++k;
      if (k == n_) throw MalformedCheckMatrix("Z block of the X-free generators is singular");
      if (k != j) emit(make_op(TraceOpKind::RowSwap, j, k));
      for (std::size_t i = r; i < n_; ++i) {
        if (i != j && rows_[i].zbits().get(j)) emit(make_op(TraceOpKind::RowMul, i, j));
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = r; j < n_; ++j) {
        if (rows_[i].zbits().get(j)) emit(make_op(TraceOpKind::RowMul, i, j));
      }
    }
    mark(trace, 2);

    // Stage 3
    for (std::size_t j = r; j < n_; ++j) emit(make_op(TraceOpKind::Gate, j, 0, Gate::H));
    mark(trace, 3);

    // Stage 4
    for (std::size_t q = 0; q < n_; ++q) {
      if (rows_[q].zbits().get(q)) emit(make_op(TraceOpKind::Gate, q, 0, Gate::Sdg));
    }
    for (std::size_t q = 0; q < n_; ++q) {
      if (rows_[q].is_negative()) emit(make_op(TraceOpKind::Gate, q, 0, Gate::Z));
    }
    mark(trace, 4);

    trace.ops = std::move(ops_);
    return trace;
  }

 private:
  void emit(TraceOp op) {
    apply_op(rows_, op);
    ops_.push_back(std::move(op));
  }
  void mark(ReductionTrace& trace, std::size_t stage) {
    emit(make_op(TraceOpKind::StageMark, stage));
    trace.stages[stage - 1] = CheckMatrix(n_, rows_);
  }

  std::size_t n_;
  std::vector<PauliElement> rows_;
  std::vector<TraceOp> ops_;
};

Graph graph_from_final_stage(const CheckMatrix& t4, const std::vector<std::size_t>& perm) {
  const std::size_t n = t4.num_qubits();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = t4.row(i);
    if (row.phase() != 0 || row.xbits() != BitVector::from_indices(n, std::vector<std::size_t>{i}) ||
        row.zbits().get(i)) {
      throw Error("reduction did not reach graph form at generator " + std::to_string(i));
    }
    for (auto j : row.zbits().indices()) {
      if (!t4.row(j).zbits().get(i)) throw Error("reduced Z block is not symmetric");
      if (i < j) g.add_edge(perm[i], perm[j]);
    }
  }
  return g;
}

std::vector<LocalGate> gates_on_original_qubits(const ReductionTrace& trace) {
  std::vector<LocalGate> gates;
  for (const auto& op : trace.ops) {
    if (op.kind == TraceOpKind::Gate) gates.push_back({trace.permutation[op.a], op.gate});
  }
  return gates;
}

Reduction reduce(const CheckMatrix& c) {
  Reduction out;
  out.trace = Reducer(c).run();
  out.graph = graph_from_final_stage(out.trace.stages[3], out.trace.permutation);
  out.local_gates = gates_on_original_qubits(out.trace);
  if (!same_stabilizer(apply_local_cliffords(c, out.local_gates), graph_check_matrix(out.graph))) {
    throw Error("recorded local gates do not map the input to the reduced graph state");
  }
  return out;
}

}  // namespace

Reduction reduce_to_graph(const CheckMatrix& c, const Limits& limits) {
  Reduction out = reduce(c);
  constexpr std::size_t kCrossCheckQubits = 12;
  if (c.num_qubits() <= std::min(kCrossCheckQubits, limits.statevec)) {
    Amplitudes psi = state_vector(c, limits);
    for (const auto& g : out.local_gates) apply_gate(psi, g.qubit, g.gate);
    if (max_abs_diff_up_to_phase(psi, graph_state_vector(out.graph, limits)) > 1e-10) {
      throw Error("state vector of the reduced graph does not match the input under the recorded gates");
    }
  }
  return out;
}

Graph graph_form(const CheckMatrix& c) { return reduce(c).graph; }

std::array<CheckMatrix, 4> replay_trace(const CheckMatrix& c, const ReductionTrace& trace) {
  std::array<CheckMatrix, 4> stages;
  auto rows = c.rows();
  for (const auto& op : trace.ops) {
    apply_op(rows, op);
    if (op.kind == TraceOpKind::StageMark) {
      if (op.a < 1 || op.a > 4) throw InvalidParam("bad stage mark");
      stages[op.a - 1] = CheckMatrix(c.num_qubits(), rows);
    }
  }
  return stages;
}

std::size_t support_rank(const CheckMatrix& c) {
  return std::min(rank_xor(c.x_block()), rank_xor(c.z_block()));
}

std::size_t min_support_rank_over_orbit(const Graph& g, const Limits& limits) {
  const auto orbit = lc_orbit(g, false, limits);
  std::size_t best = g.order();
  for (const auto& member : orbit.members) best = std::min(best, rank_xor(member.adjacency()));
  return best;
}

RankRelationReport verify_rank_relations(const Graph& g, std::span<const std::size_t> region, const Limits& limits) {
  const std::size_t n = g.order();
  std::vector<bool> in_region(n, false);
  for (auto v : region) {
    if (v >= n || in_region[v]) throw InvalidPartition("region must list distinct vertices of the graph");
    in_region[v] = true;
  }
  if (region.empty() || region.size() >= n) throw InvalidPartition("region must be a non-empty proper subset");
  for (const auto& [u, v] : g.edges()) {
    if (in_region[u] == in_region[v]) {
      throw InvalidPartition("edge " + std::to_string(u) + "-" + std::to_string(v) + " does not cross the partition");
    }
  }
  std::vector<std::size_t> rows(region.begin(), region.end());
  std::sort(rows.begin(), rows.end());
  std::vector<std::size_t> cols;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_region[v]) cols.push_back(v);
  }
  const BitMatrix a = g.adjacency().submatrix(rows, cols);

  RankRelationReport rep;
  rep.n = n;
  rep.r = rows.size();
  rep.w = minus_sign_count(g, limits);
  rep.support_subgroup_order = support_subgroup(graph_check_matrix(g), rows, limits).size();
  rep.schmidt_rank = schmidt_rank(g, rows, limits);
  rep.rank_xor = rank_xor(a);
  rep.rank_rational = rank_rational(a);
  rep.bp = biclique_partition_number(a, std::max<std::size_t>(1, std::min(rows.size(), cols.size())), limits);

  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (rep.w < half && std::has_single_bit(half - rep.w)) {
    const auto e = static_cast<std::size_t>(std::countr_zero(half - rep.w));
    rep.minus_sign_relation = rep.schmidt_rank == n - e - 1;
  }
  rep.subgroup_relation = rep.support_subgroup_order * (std::uint64_t{1} << (n - rep.r - 1)) + rep.w == half;
  if (rep.bp) {
    rep.bp_bounds = rep.schmidt_rank <= *rep.bp && *rep.bp <= rep.r;
    rep.rank_chain = rep.rank_xor <= rep.rank_rational && rep.rank_rational <= *rep.bp && *rep.bp <= rep.r;
    rep.rational_equals_bp = rep.rank_rational == *rep.bp;
  }
  return rep;
}

}  // namespace gslab
