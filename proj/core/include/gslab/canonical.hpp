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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gslab/graph.hpp"
#include "gslab/limits.hpp"

namespace gslab {

/// Label-invariant isomorphism key: equal keys iff isomorphic graphs.
struct CanonicalKey {
  std::size_t n = 0;
  /// Upper triangle of the canonically relabelled adjacency matrix, packed.
  std::vector<std::uint64_t> code;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.code <=> b.code;
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

struct CanonicalForm {
  CanonicalKey key;
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

/// Exact canonical labeling by partition refinement plus an
/// individualization search (twin vertices are branched on once).
/// Throws ResourceLimit for graphs above limits.canonical vertices.
CanonicalForm canonical_form(const Graph& g, const Limits& limits = {});
CanonicalKey canonical_key(const Graph& g, const Limits& limits = {});
/// g relabelled into canonical position order.
Graph canonical_graph(const Graph& g, const Limits& limits = {});

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits = {});
/// A permutation p with relabel(a, p) == b, if the graphs are isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b, const Limits& limits = {});

}  // namespace gslab
