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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gslab/gslab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gslab;

TEST(Graph, EdgeEditingAndErrors) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  g.toggle_edge(0, 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
  g.remove_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THROW(g.add_edge(0, 4), VertexOutOfRange);
  EXPECT_THROW(g.add_edge(2, 2), InvalidParam);
  EXPECT_THROW(local_complement(g, 9), VertexOutOfRange);
}

TEST(LocalComplement, StarCentreGivesComplete) {
  EXPECT_EQ(local_complement(star_graph(5), 0), complete_graph(5));
  EXPECT_EQ(local_complement(complete_graph(5), 0), star_graph(5));
}

TEST(LocalComplement, PathMiddleAddsTriangleEdge) {
  Graph expected = path_graph(3);
  expected.add_edge(0, 2);
  EXPECT_EQ(local_complement(path_graph(3), 1), expected);
}

TEST(LocalComplement, IsolatedVertexIsFixed) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(local_complement(g, 2), g);
}

TEST(LocalComplement, InvolutionAndOnlyNeighbourhoodChanges) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 9);
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph h = local_complement(g, v);
      EXPECT_EQ(local_complement(h, v), g);
      for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
          const bool inside = g.has_edge(a, v) && g.has_edge(b, v);
          EXPECT_EQ(h.has_edge(a, b), inside ? !g.has_edge(a, b) : g.has_edge(a, b));
        }
      }
    }
  }
}

TEST(ShortCycles, ExamplesAndOracle) {
  EXPECT_FALSE(has_short_cycle(binary_star(6)));
  EXPECT_TRUE(has_short_cycle(biclique(2, 2)));
  EXPECT_TRUE(has_short_cycle(complete_graph(3)));
  EXPECT_FALSE(has_short_cycle(cycle_graph(5)));
  EXPECT_TRUE(has_short_cycle(cycle_graph(4)));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : gen::labeled_graphs(n)) EXPECT_EQ(has_short_cycle(g), oracle::has_short_cycle(g));
  }
}

TEST(Bipartition, ValidColouringOrAbsent) {
  const auto parts = bipartition(biclique(3, 4));
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(parts->second, (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_FALSE(bipartition(complete_graph(3)));
  EXPECT_FALSE(bipartition(cycle_graph(5)));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 8, 0.3);
    const auto p = bipartition(g);
    bool any = false;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << g.order()) && !any; ++c) {
      bool ok = true;
      for (const auto& [u, v] : g.edges()) ok = ok && (((c >> u) ^ (c >> v)) & 1u);
      any = ok;
    }
    EXPECT_EQ(p.has_value(), any);
    if (p) {
      std::vector<int> side(g.order(), -1);
      for (auto v : p->first) side[v] = 0;
      for (auto v : p->second) side[v] = 1;
      for (auto s : side) EXPECT_NE(s, -1);
      for (const auto& [u, v] : g.edges()) EXPECT_NE(side[u], side[v]);
    }
  }
}

TEST(Leaves, SinglePassRemoval) {
  EXPECT_EQ(leaves(star_graph(5)), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(remove_leaves(star_graph(5)).order(), 1u);
  EXPECT_EQ(remove_leaves(repeater_complete(4)), complete_graph(4));
  EXPECT_EQ(remove_leaves(path_graph(5)), path_graph(3));
  EXPECT_TRUE(leaves(complete_graph(4)).empty());
}

TEST(Families, SizesAndLabeling) {
  EXPECT_EQ(star_graph(6).edge_count(), 5u);
  EXPECT_EQ(star_center(star_graph(6)), std::optional<Vertex>(0));
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  EXPECT_EQ(biclique(3, 4).edge_count(), 12u);
  for (std::size_t n = 2; n <= 12; ++n) {
    const Graph b = binary_star(n);
    EXPECT_EQ(b.order(), n);
    EXPECT_EQ(b.edge_count(), n - 1);
    EXPECT_TRUE(is_tree(b));
    EXPECT_TRUE(b.has_edge(0, 1));
  }
  EXPECT_EQ(repeater_complete(4).order(), 8u);
  EXPECT_TRUE(repeater_complete(4).has_edge(1, 5));
  EXPECT_EQ(repeater_biclique(2, 3).order(), 10u);
  EXPECT_TRUE(repeater_biclique(2, 3).has_edge(2, 7));
  EXPECT_EQ(imperfect_repeater_complete(5).order(), 9u);
  EXPECT_EQ(imperfect_repeater_complete(5).degree(0), 4u);
  const Graph irb = imperfect_repeater_biclique(3, 3);
  EXPECT_EQ(irb.order(), 10u);
  EXPECT_EQ(irb.degree(0), 3u);
  EXPECT_EQ(irb.degree(3), 3u);
  EXPECT_EQ(crazy_graph(3, 2).edge_count(), 8u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
}

TEST(Families, RepeaterEdgeArithmetic) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(repeater_complete(n).edge_count(), n * (n + 1) / 2);
  for (std::size_t n = 2; n <= 12; n += 2) {
    EXPECT_EQ(repeater_biclique(n / 2, n / 2).edge_count(), n * n / 4 + n);
    EXPECT_EQ(repeater_complete(n).edge_count() - repeater_biclique(n / 2, n / 2).edge_count(), n * (n - 2) / 4);
  }
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(star_graph(1), InvalidParam);
  EXPECT_THROW(biclique(0, 3), InvalidParam);
  EXPECT_THROW(cycle_graph(2), InvalidParam);
  EXPECT_THROW(make_family({FamilyKind::Biclique, {3, 3, 3}}), InvalidParam);
  EXPECT_EQ(make_family({FamilyKind::Biclique, {3}}), biclique(3, 3));
  EXPECT_THROW(make_family({FamilyKind::CrazyGraph, {3, 1, 2}}), InvalidParam);
}

TEST(Families, NamesRoundTrip) {
  for (auto name : family_names()) {
    const auto kind = parse_family_name(name);
    ASSERT_TRUE(kind);
    EXPECT_EQ(family_name(*kind), name);
  }
  EXPECT_FALSE(parse_family_name("petersen"));
  EXPECT_EQ(make_family({FamilyKind::GeneralizedBiclique, {2, 3}}), biclique(2, 3));
  EXPECT_EQ(make_family({FamilyKind::CrazyGraph, {3, 1, 2, 1}}).edge_count(), 4u);
}

TEST(Canonical, EqualKeysIffIsomorphic) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const Graph a = gen::random_graph(rng, n, 0.4);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph b = relabel(a, perm);
    EXPECT_EQ(canonical_key(a), canonical_key(b));
    const Graph c = gen::random_graph(rng, n, 0.4);
    EXPECT_EQ(canonical_key(a) == canonical_key(c), oracle::isomorphic(a, c));
  }
}

TEST(Canonical, IsomorphismWitness) {
  const Graph crazy = crazy_graph(3, 2);
  const Graph bic = biclique(4, 2);
  const auto p = find_isomorphism(crazy, bic);
  ASSERT_TRUE(p);
  EXPECT_EQ(relabel(crazy, *p), bic);
  EXPECT_FALSE(find_isomorphism(path_graph(4), star_graph(4)));
  EXPECT_EQ(canonical_graph(relabel(path_graph(5), std::vector<Vertex>{4, 2, 0, 1, 3})), canonical_graph(path_graph(5)));
}

TEST(Canonical, ClassCountsOfSmallGraphs) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(gen::graph_classes(n).size(), expected[n]) << n;
}

TEST(Canonical, LimitIsEnforced) {
  Limits limits;
  limits.canonical = 5;
  EXPECT_THROW(canonical_key(path_graph(6), limits), ResourceLimit);
}

TEST(GraphJson, RoundTripAndSchema) {
  const Graph g = biclique(2, 3);
  const std::string text = graph_to_json(g);
  EXPECT_EQ(text, "{\"format\":\"graphstate/1\",\"n\":5,\"edges\":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]}\n");
  EXPECT_EQ(graph_from_json(text), g);
  Graph h(3);
  h.add_edge(1, 2);
  EXPECT_EQ(graph_from_json(R"({"n": 3, "edges": [[2, 1]]})"), h);
  EXPECT_THROW(graph_from_json("{"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[0, 2]]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[0, 0]]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"n": 2, "edges": [[0, 1], [1, 0]]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"format": "other", "n": 2, "edges": []})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"edges": []})"), ParseError);
}

TEST(GraphDot, DeclaresEveryVertex) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(graph_to_dot(g), "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n");
}
