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
#include "gslab/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "gslab/canonical.hpp"
#include "gslab/errors.hpp"
#include "gslab/gf2.hpp"
#include "gslab/stabilizer.hpp"

namespace gslab {

namespace {

constexpr std::size_t kBoundVertices = 10;

void check_pp_size(const Graph& g, const Limits& limits) {
  if (g.order() > limits.pp) {
    throw ResourceLimit("Pauli persistency search limited to " + std::to_string(limits.pp) + " vertices, graph has " +
                        std::to_string(g.order()));
  }
}

Graph measure_y(const Graph& g, Vertex v) { return delete_vertex(local_complement(g, v), v); }

}  // namespace

char basis_char(Basis b) {
  switch (b) {
    case Basis::X:
      return 'X';
    case Basis::Y:
      return 'Y';
    case Basis::Z:
      return 'Z';
  }
  return '?';
}

Graph measure_pauli(const Graph& g, const MeasurementStep& step) {
  const Vertex v = step.vertex;
  if (v >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
  switch (step.basis) {
    case Basis::Z:
      return delete_vertex(g, v);
    case Basis::Y:
      return measure_y(g, v);
    case Basis::X: {
      if (g.degree(v) == 0) return delete_vertex(g, v);
      Vertex b0 = step.x_neighbor.value_or(g.neighbors(v).first_set());
      if (b0 >= g.order() || !g.has_edge(v, b0)) throw VertexOutOfRange("X-rule vertex is not a neighbour");
      Graph h = measure_y(local_complement(g, b0), v);
      return local_complement(h, b0 > v ? b0 - 1 : b0);
    }
  }
  throw InvalidParam("unknown basis");
}

PersistencyResult pauli_persistency_search(const Graph& g, const Limits& limits, bool all_x_neighbors) {
  check_pp_size(g, limits);
  if (is_edgeless(g)) return {};
  Limits canon = limits;
  canon.canonical = std::max(limits.canonical, limits.pp);

  struct Node {
    Graph graph;
    std::size_t parent;
    MeasurementStep step;
    std::size_t depth;
  };
  std::vector<Node> nodes{{g, 0, {}, 0}};
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen;
  seen.emplace(canonical_key(remove_isolated(g), canon), 0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Graph current = nodes[head].graph;
    const std::size_t depth = nodes[head].depth;
    for (Vertex v = 0; v < current.order(); ++v) {
      if (current.degree(v) == 0) continue;
      std::vector<MeasurementStep> steps{{v, Basis::Z, {}}, {v, Basis::Y, {}}};
      if (all_x_neighbors) {
        for (auto b : current.neighbor_list(v)) steps.push_back({v, Basis::X, b});
      } else {
        steps.push_back({v, Basis::X, {}});
      }
      for (const auto& step : steps) {
        Graph next = measure_pauli(current, step);
        if (is_edgeless(next)) {
          PersistencyResult res;
          res.count = depth + 1;
          res.steps.push_back(step);
          for (std::size_t i = head; i != 0; i = nodes[i].parent) res.steps.push_back(nodes[i].step);
          std::reverse(res.steps.begin(), res.steps.end());
          return res;
        }
        auto [it, inserted] = seen.emplace(canonical_key(remove_isolated(next), canon), nodes.size());
        if (inserted) nodes.push_back({std::move(next), head, step, depth + 1});
      }
    }
  }
  throw Error("measurement search ended without reaching an edgeless graph");
}

std::size_t pauli_persistency(const Graph& g, const Limits& limits, bool all_x_neighbors) {
  return pauli_persistency_search(g, limits, all_x_neighbors).count;
}

std::size_t pp_z_only(const Graph& g, const Limits& limits) {
  check_pp_size(g, limits);
  const std::size_t n = g.order();
  const auto edges = g.edges();
  std::vector<std::uint64_t> edge_masks;
  for (const auto& [u, v] : edges) edge_masks.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  std::size_t best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    if (std::all_of(edge_masks.begin(), edge_masks.end(), [s](std::uint64_t e) { return (e & s) != 0; })) best = size;
  }
  return best;
}

SchmidtMeasureBounds schmidt_measure_bounds(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > kBoundVertices) {
    throw ResourceLimit("bipartition sweep limited to " + std::to_string(kBoundVertices) + " vertices");
  }
  SchmidtMeasureBounds b;
  // Vertex n-1 stays on the complement side so each cut is seen once.
  for (std::uint64_t s = 1; n > 1 && s < (std::uint64_t{1} << (n - 1)); ++s) {
    std::vector<std::size_t> region;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1u) region.push_back(v);
    }
    b.lower = std::max(b.lower, cut_rank(g, region));
  }
  b.upper = pauli_persistency(g, limits);
  return b;
}

}  // namespace gslab
