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

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "gslab/gslab.hpp"

namespace gen {

inline std::vector<gslab::Graph> labeled_graphs(std::size_t n) {
  std::vector<gslab::Graph> out;
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    gslab::Graph g(n);
    std::size_t k = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++k) {
        if ((mask >> k) & 1u) g.add_edge(u, v);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

// One graph per isomorphism class on exactly n vertices, grown one vertex at a time.
inline std::vector<gslab::Graph> graph_classes(std::size_t n) {
  std::vector<gslab::Graph> level{gslab::Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::unordered_set<gslab::CanonicalKey, gslab::CanonicalKeyHash> seen;
    std::vector<gslab::Graph> next;
    for (const auto& h : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        gslab::Graph g(k);
        for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
        for (std::size_t u = 0; u + 1 < k; ++u) {
          if ((nb >> u) & 1u) g.add_edge(u, k - 1);
        }
        if (seen.insert(gslab::canonical_key(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline gslab::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  gslab::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Uniform labeled tree from a random Pruefer sequence.
inline gslab::Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  gslab::Graph g(n);
  if (n < 2) return g;
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        g.add_edge(v, c);
        --degree[v];
        --degree[c];
        break;
      }
    }
  }
  std::size_t u = n, w = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) (u == n ? u : w) = v;
  }
  g.add_edge(u, w);
  return g;
}

inline std::vector<gslab::LocalGate> random_clifford_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len = 6) {
  std::vector<gslab::LocalGate> word;
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    for (std::size_t k = 0; k < len; ++k) {
      const auto idx = std::uniform_int_distribution<std::size_t>(0, gslab::kAllGates.size() - 1)(rng);
      word.push_back({q, gslab::kAllGates[idx]});
    }
  }
  std::shuffle(word.begin(), word.end(), rng);
  return word;
}

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

}  // namespace gen
