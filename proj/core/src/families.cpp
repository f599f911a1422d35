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
#include "gslab/families.hpp"

#include <array>
#include <string>
#include <utility>

#include "gslab/errors.hpp"

namespace gslab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParam(what);
}

void add_biclique_edges(Graph& g, std::size_t left_begin, std::size_t left_size, std::size_t right_begin,
                        std::size_t right_size) {
  for (std::size_t i = 0; i < left_size; ++i) {
    for (std::size_t j = 0; j < right_size; ++j) g.add_edge(left_begin + i, right_begin + j);
  }
}

Graph crazy_columns(const std::vector<std::size_t>& sizes) {
  require(sizes.size() >= 2, "crazy graph needs at least two columns");
  std::size_t total = 0;
  for (auto s : sizes) {
    require(s >= 1, "crazy graph columns need at least one vertex");
    total += s;
  }
  Graph g(total);
  std::size_t begin = 0;
  for (std::size_t k = 0; k + 1 < sizes.size(); ++k) {
    add_biclique_edges(g, begin, sizes[k], begin + sizes[k], sizes[k + 1]);
    begin += sizes[k];
  }
  return g;
}

// Appends one leaf to each listed core vertex, in order.
Graph with_leaves(const Graph& core, const std::vector<Vertex>& parents) {
  Graph g(core.order() + parents.size());
  for (auto [u, v] : core.edges()) g.add_edge(u, v);
  for (std::size_t i = 0; i < parents.size(); ++i) g.add_edge(parents[i], core.order() + i);
  return g;
}

constexpr std::array<std::pair<FamilyKind, std::string_view>, 12> kNames{{
    {FamilyKind::Star, "star"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::Biclique, "biclique"},
    {FamilyKind::BinaryStar, "binary-star"},
    {FamilyKind::GeneralizedBiclique, "generalized-biclique"},
    {FamilyKind::CrazyGraph, "crazy"},
    {FamilyKind::RepeaterComplete, "repeater-complete"},
    {FamilyKind::RepeaterBiclique, "repeater-biclique"},
    {FamilyKind::ImperfectRepeaterComplete, "imperfect-repeater-complete"},
    {FamilyKind::ImperfectRepeaterBiclique, "imperfect-repeater-biclique"},
    {FamilyKind::Path, "path"},
    {FamilyKind::Cycle, "cycle"},
}};

}  // namespace

Graph star_graph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph biclique(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "biclique needs m, n >= 1");
  Graph g(m + n);
  add_biclique_edges(g, 0, m, m, n);
  return g;
}

Graph binary_star(std::size_t n) {
  require(n >= 2, "binary star needs n >= 2");
  const std::size_t leaves = n - 2;
  const std::size_t left = (leaves + 1) / 2;
  return binary_star(left + 1, leaves - left + 1);
}

Graph binary_star(std::size_t p, std::size_t q) {
  require(p >= 1 && q >= 1, "binary star needs p, q >= 1");
  Graph g(p + q);
  g.add_edge(0, 1);
  for (std::size_t i = 0; i + 1 < p; ++i) g.add_edge(0, 2 + i);
  for (std::size_t i = 0; i + 1 < q; ++i) g.add_edge(1, p + 1 + i);
  return g;
}

Graph crazy_graph(std::size_t columns, std::size_t per_column) {
  return crazy_columns(std::vector<std::size_t>(columns, per_column));
}

Graph repeater_complete(std::size_t core) {
  require(core >= 2, "repeater core needs n >= 2");
  std::vector<Vertex> parents(core);
  for (Vertex v = 0; v < core; ++v) parents[v] = v;
  return with_leaves(complete_graph(core), parents);
}

Graph repeater_biclique(std::size_t m, std::size_t n) {
  std::vector<Vertex> parents(m + n);
  for (Vertex v = 0; v < m + n; ++v) parents[v] = v;
  return with_leaves(biclique(m, n), parents);
}

Graph imperfect_repeater_complete(std::size_t core) {
  require(core >= 2, "repeater core needs n >= 2");
  std::vector<Vertex> parents;
  for (Vertex v = 1; v < core; ++v) parents.push_back(v);
  return with_leaves(complete_graph(core), parents);
}

Graph imperfect_repeater_biclique(std::size_t m, std::size_t n) {
  const Graph core = biclique(m, n);
  std::vector<Vertex> parents;
  for (Vertex v = 0; v < m + n; ++v) {
    if (v != 0 && v != m) parents.push_back(v);
  }
  return with_leaves(core, parents);
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      throw InvalidParam("family '" + std::string(family_name(spec.kind)) + "' expects " + std::to_string(lo) +
                         (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters");
    }
  };
  switch (spec.kind) {
    case FamilyKind::Star:
      arity(1, 1);
      return star_graph(p[0]);
    case FamilyKind::Complete:
      arity(1, 1);
      return complete_graph(p[0]);
    case FamilyKind::Biclique:
      arity(1, 2);
      return biclique(p[0], p.size() == 2 ? p[1] : p[0]);
    case FamilyKind::GeneralizedBiclique:
      arity(2, 2);
      return biclique(p[0], p[1]);
    case FamilyKind::BinaryStar:
      arity(1, 2);
      return p.size() == 1 ? binary_star(p[0]) : binary_star(p[0], p[1]);
    case FamilyKind::CrazyGraph: {
      require(p.size() >= 2, "crazy graph expects (columns, m) or (columns, m_0, ..., m_{c-1})");
      const std::size_t columns = p[0];
      if (p.size() == 2) return crazy_graph(columns, p[1]);
      require(p.size() == columns + 1, "crazy graph needs one size per column");
      return crazy_columns(std::vector<std::size_t>(p.begin() + 1, p.end()));
    }
    case FamilyKind::RepeaterComplete:
      arity(1, 1);
      return repeater_complete(p[0]);
    case FamilyKind::RepeaterBiclique:
      arity(1, 2);
      return repeater_biclique(p[0], p.size() == 2 ? p[1] : p[0]);
    case FamilyKind::ImperfectRepeaterComplete:
      arity(1, 1);
      return imperfect_repeater_complete(p[0]);
    case FamilyKind::ImperfectRepeaterBiclique:
      arity(1, 2);
      return imperfect_repeater_biclique(p[0], p.size() == 2 ? p[1] : p[0]);
    case FamilyKind::Path:
      arity(1, 1);
      return path_graph(p[0]);
    case FamilyKind::Cycle:
      arity(1, 1);
      return cycle_graph(p[0]);
  }
  throw InvalidParam("unknown family");
}

std::string_view family_name(FamilyKind kind) {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_name(std::string_view name) {
  for (auto [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string_view> family_names() {
  std::vector<std::string_view> out;
  for (auto [k, n] : kNames) out.push_back(n);
  return out;
}

}  // namespace gslab
