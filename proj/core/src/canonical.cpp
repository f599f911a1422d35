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
#include "gslab/canonical.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gslab/errors.hpp"

namespace gslab {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells until every vertex in a cell sees the same number of
// neighbours in every other cell. Sub-cells are ordered by their
// neighbour-count signature, so the result only depends on the graph and
// the incoming ordered partition.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> cell_of(g.order());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (auto v : cells[c]) cell_of[v] = c;
    }
    for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
      if (cells[c].size() == 1) continue;
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig;
      sig.reserve(cells[c].size());
      for (auto v : cells[c]) {
        std::vector<std::size_t> counts(cells.size(), 0);
        for (auto u : g.neighbor_list(v)) ++counts[cell_of[u]];
        sig.emplace_back(std::move(counts), v);
      }
      std::stable_sort(sig.begin(), sig.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      if (sig.front().first == sig.back().first) continue;
      Cells split;
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) split.emplace_back();
        split.back().push_back(sig[i].second);
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
      changed = true;
    }
  }
}

std::vector<std::uint64_t> encode(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  std::vector<std::uint64_t> code(words_for(n * (n - (n > 0 ? 1 : 0)) / 2), 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (g.has_edge(order[i], order[j])) code[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
    }
  }
  return code;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  BitVector nu = g.neighbors(u);
  BitVector nv = g.neighbors(v);
  nu.set(v, false);
  nv.set(u, false);
  return nu == nv;
}

struct Search {
  const Graph& g;
  bool have_best = false;
  std::vector<std::uint64_t> best_code;
  std::vector<Vertex> best_order;

  void run(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      order.reserve(g.order());
      for (const auto& c : cells) order.push_back(c.front());
      auto code = encode(g, order);
      if (!have_best || code > best_code) {
        have_best = true;
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    const auto cell = *target;
    std::vector<Vertex> tried;
    for (auto v : cell) {
      // Swapping twins is an automorphism fixing everything individualized
      // so far, so their subtrees are identical.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return are_twins(g, u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<Vertex> rest;
      for (auto u : cell) {
        if (u != v) rest.push_back(u);
      }
      next[index] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(rest));
      run(std::move(next));
    }
  }
};

}  // namespace

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(k.n);
  for (auto w : k.code) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}


CanonicalForm canonical_form(const Graph& g, const Limits& limits) {
  if (g.order() > limits.canonical) {
    throw ResourceLimit("canonical labeling limited to " + std::to_string(limits.canonical) + " vertices, graph has " +
                        std::to_string(g.order()));
  }
  CanonicalForm out;
  out.key.n = g.order();
  if (g.order() == 0) return out;

  // Initial ordered partition by degree.
  std::vector<Vertex> by_degree(g.order());
  for (Vertex v = 0; v < g.order(); ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  Cells cells;
  for (std::size_t i = 0; i < by_degree.size(); ++i) {
    if (i == 0 || g.degree(by_degree[i]) != g.degree(by_degree[i - 1])) cells.emplace_back();
    cells.back().push_back(by_degree[i]);
  }

  Search search{g, false, {}, {}};
  search.run(std::move(cells));
  out.key.code = std::move(search.best_code);
  out.order = std::move(search.best_order);
  return out;
}

CanonicalKey canonical_key(const Graph& g, const Limits& limits) { return canonical_form(g, limits).key; }

Graph canonical_graph(const Graph& g, const Limits& limits) {
  const auto form = canonical_form(g, limits);
  std::vector<Vertex> perm(form.order.size());
  for (std::size_t i = 0; i < form.order.size(); ++i) perm[form.order[i]] = i;
  return relabel(g, perm);
}

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a, limits) == canonical_key(b, limits);
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, const Limits& limits) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  const auto ca = canonical_form(a, limits);
  const auto cb = canonical_form(b, limits);
  if (ca.key != cb.key) return std::nullopt;
  std::vector<Vertex> perm(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) perm[ca.order[i]] = cb.order[i];
  return perm;
}

}  // namespace gslab
