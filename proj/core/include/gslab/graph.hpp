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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gslab/bit_matrix.hpp"

namespace gslab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as a symmetric
/// bit-packed adjacency matrix with an all-zero diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, n) {}

  /// Edges may be given in either orientation; loops and duplicates throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  /// Throws InvalidParam unless the matrix is square, symmetric, zero-diagonal.
  static Graph from_adjacency(const BitMatrix& adjacency);

  std::size_t order() const { return adj_.rows(); }

  bool has_edge(Vertex u, Vertex v) const { return adj_.get(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> neighbor_words(Vertex v) const { return adj_.row_words(v); }
  BitVector neighbors(Vertex v) const { return adj_.row(v); }
  std::vector<Vertex> neighbor_list(Vertex v) const { return adj_.row(v).indices(); }
  std::size_t degree(Vertex v) const { return adj_.row_popcount(v); }
  std::size_t edge_count() const { return adj_.count_ones() / 2; }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const BitMatrix& adjacency() const { return adj_; }

  /// Complements the subgraph induced on N(v), in place.
  void complement_neighborhood(Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  BitMatrix adj_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

/// Graph with the subgraph induced on the neighbourhood of v complemented.
Graph local_complement(const Graph& g, Vertex v);
/// Applies local_complement for each step, left to right.
Graph apply_lc_sequence(Graph g, std::span<const Vertex> steps);

/// True iff g contains a cycle of length 3 or 4.
bool has_short_cycle(const Graph& g);

/// A proper 2-colouring (colour-0 vertices, colour-1 vertices), if one
/// exists. The lowest vertex of every component receives colour 0.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g);

/// Degree-1 vertices in increasing order.
std::vector<Vertex> leaves(const Graph& g);
/// Deletes every current leaf once (not iterated); remaining vertices keep
/// their relative order. Path(2) becomes the empty graph.
Graph remove_leaves(const Graph& g);

/// Deletes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);
/// Subgraph induced on 'keep', relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Drops isolated vertices.
Graph remove_isolated(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_tree(const Graph& g);
/// Centre of a star graph (n >= 2, one vertex adjacent to all others, no
/// other edges). For n = 2 the centre is vertex 0.
std::optional<Vertex> star_center(const Graph& g);
bool is_complete(const Graph& g);

}  // namespace gslab
