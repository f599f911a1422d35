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
#include "gslab/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>

#include "gslab/errors.hpp"
#include "gslab/gf2.hpp"
#include "gslab/reduction.hpp"

namespace gslab {

namespace {

// Support masks are held in one machine word.
constexpr std::size_t kMaxMaskQubits = 30;

void check_enumerable(std::size_t n, const Limits& limits) {
  if (n > limits.enumeration || n > kMaxMaskQubits) {
    throw ResourceLimit("stabilizer enumeration limited to " + std::to_string(limits.enumeration) +
                        " qubits, state has " + std::to_string(n));
  }
}

std::uint64_t support_mask(const PauliElement& p) {
  const auto x = p.xbits().words();
  const auto z = p.zbits().words();
  return x.empty() ? 0 : (x[0] | z[0]);
}

std::uint64_t region_mask(std::size_t n, std::span<const std::size_t> region) {
  std::uint64_t mask = 0;
  for (auto q : region) {
    if (q >= n) throw InvalidPartition("region qubit " + std::to_string(q) + " out of range");
    if ((mask >> q) & 1u) throw InvalidPartition("region lists qubit " + std::to_string(q) + " twice");
    mask |= std::uint64_t{1} << q;
  }
  return mask;
}

}  // namespace

CheckMatrix::CheckMatrix(std::size_t n, std::vector<PauliElement> rows) : n_(n), rows_(std::move(rows)) {
  if (rows_.size() != n_) {
    throw MalformedCheckMatrix("expected " + std::to_string(n_) + " generators, got " + std::to_string(rows_.size()));
  }
  for (const auto& r : rows_) {
    if (r.num_qubits() != n_) throw MalformedCheckMatrix("generator acts on the wrong number of qubits");
    if (!r.is_hermitian()) throw MalformedCheckMatrix("generator " + r.to_string() + " is not Hermitian");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!rows_[i].commutes_with(rows_[j])) {
        throw MalformedCheckMatrix("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                   " anticommute");
      }
    }
  }
  if (rank_xor(symplectic()) != n_) throw MalformedCheckMatrix("generators are not independent");
}

CheckMatrix CheckMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<PauliElement> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(PauliElement::parse(r));
  const std::size_t n = parsed.empty() ? 0 : parsed.front().num_qubits();
  return CheckMatrix(n, std::move(parsed));
}

BitMatrix CheckMatrix::x_block() const {
  BitMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) m.set_row(i, rows_[i].xbits());
  return m;
}

BitMatrix CheckMatrix::z_block() const {
  BitMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) m.set_row(i, rows_[i].zbits());
  return m;
}

BitMatrix CheckMatrix::symplectic() const {
  BitMatrix m(n_, 2 * n_);
  for (std::size_t i = 0; i < n_; ++i) m.set_row(i, rows_[i].symplectic());
  return m;
}

std::vector<PauliElement> canonical_generators(const CheckMatrix& c) {
  std::vector<PauliElement> rows = c.rows();
  const std::size_t n = c.num_qubits();
  auto bit = [n](const PauliElement& p, std::size_t col) {
    return col < n ? p.xbits().get(col) : p.zbits().get(col - n);
  };
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < 2 * n && pivot < rows.size(); ++col) {
    std::size_t r = pivot;
    while (r < rows.size() && !bit(rows[r], col)) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != pivot && bit(rows[k], col)) rows[k] *= rows[pivot];
    }
    ++pivot;
  }
  return rows;
}

bool same_stabilizer(const CheckMatrix& a, const CheckMatrix& b) {
  return a.num_qubits() == b.num_qubits() && canonical_generators(a) == canonical_generators(b);
}

bool StabilizerGroup::same_elements(const StabilizerGroup& other) const {
  if (n_ != other.n_ || elements_.size() != other.elements_.size()) return false;
  auto a = elements_;
  auto b = other.elements_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

CheckMatrix graph_check_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<PauliElement> rows;
  rows.reserve(n);
  for (Vertex a = 0; a < n; ++a) {
    BitVector x(n);
    x.set(a);
    rows.emplace_back(std::move(x), g.neighbors(a), 0);
  }
  return CheckMatrix(n, std::move(rows));
}

StabilizerGroup enumerate_stabilizer(const CheckMatrix& c, const Limits& limits) {
  const std::size_t n = c.num_qubits();
  check_enumerable(n, limits);
  const std::size_t count = std::size_t{1} << n;
  std::vector<PauliElement> elements;
  elements.reserve(count);
  elements.emplace_back(n);
  for (std::size_t s = 1; s < count; ++s) {
    const auto low = static_cast<std::size_t>(std::countr_zero(s));
    elements.push_back(elements[s & (s - 1)] * c.row(low));
  }
  return StabilizerGroup(n, std::move(elements));
}

std::size_t distance(const CheckMatrix& c, const Limits& limits) {
  const auto group = enumerate_stabilizer(c, limits);
  std::size_t best = c.num_qubits();
  for (std::size_t s = 1; s < group.size(); ++s) best = std::min(best, group.elements()[s].weight());
  return best;
}

namespace {

// minimal[mask] is set for supports that occur in the group and contain no
// other occurring non-empty support. Uses a subset-sum sweep over all masks.
std::vector<bool> minimal_support_table(const StabilizerGroup& group) {
  const std::size_t n = group.num_qubits();
  const std::size_t full = std::size_t{1} << n;
  std::vector<bool> present(full, false);
  for (std::size_t s = 1; s < group.size(); ++s) present[support_mask(group.elements()[s])] = true;
  std::vector<bool> below = present;  // below[m]: some occurring support is a subset of m
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < full; ++m) {
      if ((m & bit) && below[m ^ bit]) below[m] = true;
    }
  }
  std::vector<bool> minimal(full, false);
  for (std::size_t m = 1; m < full; ++m) {
    if (!present[m]) continue;
    bool proper = false;
    for (std::size_t b = 0; b < n && !proper; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      if ((m & bit) && below[m ^ bit]) proper = true;
    }
    minimal[m] = !proper;
  }
  return minimal;
}

}  // namespace

std::vector<PauliElement> minimal_elements(const CheckMatrix& c, const Limits& limits) {
  const auto group = enumerate_stabilizer(c, limits);
  const auto minimal = minimal_support_table(group);
  std::vector<PauliElement> out;
  for (std::size_t s = 1; s < group.size(); ++s) {
    if (minimal[support_mask(group.elements()[s])]) out.push_back(group.elements()[s]);
  }
  return out;
}

StabilizerGroup minimal_subgroup(const CheckMatrix& c, const Limits& limits) {
  const std::size_t n = c.num_qubits();
  const auto group = enumerate_stabilizer(c, limits);
  const auto minimal = minimal_support_table(group);
  std::vector<BitVector> span_rows;
  for (std::size_t s = 1; s < group.size(); ++s) {
    if (minimal[support_mask(group.elements()[s])]) span_rows.push_back(group.elements()[s].symplectic());
  }
  const auto ech = row_echelon(BitMatrix::from_rows(span_rows, 2 * n));
  std::vector<PauliElement> members;
  for (const auto& e : group.elements()) {
    BitVector v = e.symplectic();
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      if (v.get(ech.pivot_cols[i])) v ^= ech.reduced.row(i);
    }
    if (v.none()) members.push_back(e);
  }
  return StabilizerGroup(n, std::move(members));
}

bool check_msc(const CheckMatrix& c, const Limits& limits) {
  check_enumerable(c.num_qubits(), limits);
  if (product_factors(c).size() > 1) {
    throw DisconnectedGraph("the Minimal Support Condition is defined for fully connected states only");
  }
  const auto m = minimal_subgroup(c, limits);
  for (std::size_t q = 0; q < c.num_qubits(); ++q) {
    unsigned seen = 0;
    for (const auto& e : m.elements()) seen |= 1u << static_cast<unsigned>(e.letter(q));
    constexpr unsigned kAll = (1u << static_cast<unsigned>(PauliLetter::X)) |
                              (1u << static_cast<unsigned>(PauliLetter::Y)) |
                              (1u << static_cast<unsigned>(PauliLetter::Z));
    if ((seen & kAll) != kAll) return false;
  }
  return true;
}

bool check_msc(const Graph& g, const Limits& limits) {
  if (!is_connected(g)) {
    throw DisconnectedGraph("the Minimal Support Condition is defined for connected graphs only");
  }
  return check_msc(graph_check_matrix(g), limits);
}

StabilizerGroup support_subgroup(const CheckMatrix& c, std::span<const std::size_t> region, const Limits& limits) {
  const std::uint64_t mask = region_mask(c.num_qubits(), region);
  const auto group = enumerate_stabilizer(c, limits);
  std::vector<PauliElement> inside;
  for (const auto& e : group.elements()) {
    if ((support_mask(e) & ~mask) == 0) inside.push_back(e);
  }
  return StabilizerGroup(c.num_qubits(), std::move(inside));
}

std::size_t schmidt_rank(const CheckMatrix& c, std::span<const std::size_t> region, const Limits& limits) {
  region_mask(c.num_qubits(), region);
  if (region.empty() || region.size() >= c.num_qubits()) {
    throw InvalidPartition("region must be a non-empty proper subset of the qubits");
  }
  const auto sub = support_subgroup(c, region, limits);
  const auto log_size = static_cast<std::size_t>(std::countr_zero(sub.size()));
  return region.size() - log_size;
}

std::size_t schmidt_rank(const Graph& g, std::span<const std::size_t> region, const Limits& limits) {
  return schmidt_rank(graph_check_matrix(g), region, limits);
}

std::size_t cut_rank(const Graph& g, std::span<const std::size_t> region) {
  const std::uint64_t mask = region_mask(g.order(), region);
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!((mask >> v) & 1u)) rest.push_back(v);
  }
  return rank_xor(g.adjacency().submatrix(region, rest));
}

CheckMatrix apply_single_qubit_clifford(const CheckMatrix& c, std::size_t qubit, Gate gate) {
  if (qubit >= c.num_qubits()) throw VertexOutOfRange("qubit " + std::to_string(qubit) + " out of range");
  auto rows = c.rows();
  for (auto& r : rows) conjugate_in_place(r, qubit, gate);
  return CheckMatrix(c.num_qubits(), std::move(rows));
}

CheckMatrix apply_local_cliffords(const CheckMatrix& c, std::span<const LocalGate> gates) {
  auto rows = c.rows();
  for (const auto& g : gates) {
    if (g.qubit >= c.num_qubits()) throw VertexOutOfRange("qubit " + std::to_string(g.qubit) + " out of range");
    for (auto& r : rows) conjugate_in_place(r, g.qubit, g.gate);
  }
  return CheckMatrix(c.num_qubits(), std::move(rows));
}

std::vector<LocalGate> lc_gates(const Graph& g, Vertex a) {
  if (a >= g.order()) throw VertexOutOfRange("vertex out of range");
  std::vector<LocalGate> gates{{a, Gate::SqrtX}};
  for (auto b : g.neighbor_list(a)) gates.push_back({b, Gate::Sdg});
  return gates;
}

std::vector<std::vector<std::size_t>> product_factors(const CheckMatrix& c) {
  return connected_components(graph_form(c));
}

std::string to_stabilizer_text(const CheckMatrix& c) {
  std::string out;
  for (const auto& r : c.rows()) {
    out += r.to_string();
    out.push_back('\n');
  }
  return out;
}

CheckMatrix parse_stabilizer_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() != '+' && line.front() != '-') {
      throw ParseError("stabilizer line must start with '+' or '-': " + line);
    }
    if (line.size() > 1 && line[1] == 'i') throw ParseError("stabilizer generators must have phase +1 or -1");
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("no stabilizer generators");
  for (const auto& l : lines) {
    if (l.size() - 1 != lines.size()) {
      throw ParseError("expected " + std::to_string(lines.size()) + " letters per generator: " + l);
    }
  }
  return CheckMatrix::from_strings(lines);
}

}  // namespace gslab
