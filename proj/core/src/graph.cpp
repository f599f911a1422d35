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
#include "gslab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gslab/errors.hpp"

namespace gslab {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw VertexOutOfRange("edge endpoint out of range");
    if (u == v) throw InvalidParam("self-loops are not allowed");
    if (g.has_edge(u, v)) throw InvalidParam("duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::from_adjacency(const BitMatrix& adjacency) {
  if (adjacency.rows() != adjacency.cols()) throw InvalidParam("adjacency matrix must be square");
  if (!adjacency.is_symmetric()) throw InvalidParam("adjacency matrix must be symmetric");
  for (std::size_t i = 0; i < adjacency.rows(); ++i) {
    if (adjacency.get(i, i)) throw InvalidParam("adjacency matrix must have a zero diagonal");
  }
  Graph g;
  g.adj_ = adjacency;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for graph of order " +
                           std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParam("self-loops are not allowed");
  adj_.set(u, v);
  adj_.set(v, u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_.set(u, v, false);
  adj_.set(v, u, false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidParam("self-loops are not allowed");
  adj_.flip(u, v);
  adj_.flip(v, u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (auto v : neighbor_list(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::complement_neighborhood(Vertex v) {
  check_vertex(v);
  const auto nbrs = adj_.row(v);
  // For each neighbour u, row u ^= N(v) minus u itself; symmetry is kept
  // because the update is the same rank-one pattern on both sides.
  for (auto u : nbrs.indices()) {
    auto row = adj_.row_words(u);
    auto nw = nbrs.words();
    for (std::size_t k = 0; k < row.size(); ++k) row[k] ^= nw[k];
    adj_.flip(u, u);
  }
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (auto w : g.neighbor_words(v)) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

Graph local_complement(const Graph& g, Vertex v) {
  Graph out = g;
  out.complement_neighborhood(v);
  return out;
}

Graph apply_lc_sequence(Graph g, std::span<const Vertex> steps) {
  for (auto v : steps) g.complement_neighborhood(v);
  return g;
}

bool has_short_cycle(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbor_words(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto nv = g.neighbor_words(v);
      std::size_t common = 0;
      for (std::size_t k = 0; k < nu.size(); ++k) common += static_cast<std::size_t>(std::popcount(nu[k] & nv[k]));
      // Two common neighbours close a 4-cycle; one common neighbour of an
      // adjacent pair closes a triangle.
      if (common >= 2 || (common >= 1 && g.has_edge(u, v))) return true;
    }
  }
  return false;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : g.neighbor_list(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

std::vector<Vertex> leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

Graph remove_leaves(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw VertexOutOfRange("vertex out of range");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw VertexOutOfRange("vertex out of range");
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidParam("permutation size does not match graph order");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InvalidParam("not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph remove_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  if (keep.size() == g.order()) return g;
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (auto v : g.neighbor_list(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_edgeless(const Graph& g) { return g.adjacency().is_zero(); }

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.edge_count() + 1 == g.order(); }

std::optional<Vertex> star_center(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return v;
  }
  return std::nullopt;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace gslab
