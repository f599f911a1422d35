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

#include <cmath>
#include <random>

#include "gslab/gslab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gslab;
using oracle::Complex;

namespace {

// Projects qubit v of a graph state onto the +1 eigenvector of the basis and drops it.
Amplitudes measured_state(const Graph& g, Vertex v, Basis basis) {
  const auto psi = graph_state_vector(g);
  const double s = 1 / std::sqrt(2.0);
  std::array<Complex, 2> bra{Complex(1, 0), Complex(0, 0)};
  if (basis == Basis::X) bra = {Complex(s, 0), Complex(s, 0)};
  if (basis == Basis::Y) bra = {Complex(s, 0), Complex(0, -s)};
  const std::size_t n = g.order();
  Amplitudes out(std::size_t{1} << (n - 1));
  for (std::size_t x = 0; x < psi.size(); ++x) {
    const std::size_t low = x & ((std::size_t{1} << v) - 1);
    const std::size_t high = (x >> (v + 1)) << v;
    out[low | high] += bra[(x >> v) & 1u] * psi[x];
  }
  return out;
}

std::size_t complex_rank(std::vector<std::vector<Complex>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
    }
    if (std::abs(m[best][c]) < 1e-9) continue;
    std::swap(m[rank], m[best]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Complex f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t entanglement_bits(const Amplitudes& psi, std::size_t n, std::uint64_t region) {
  std::vector<std::size_t> in;
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n; ++q) ((region >> q) & 1u ? in : out).push_back(q);
  std::vector<std::vector<Complex>> m(std::size_t{1} << in.size(), std::vector<Complex>(std::size_t{1} << out.size()));
  for (std::size_t x = 0; x < psi.size(); ++x) {
    std::size_t a = 0;
    std::size_t b = 0;
    for (std::size_t i = 0; i < in.size(); ++i) a |= ((x >> in[i]) & 1u) << i;
    for (std::size_t i = 0; i < out.size(); ++i) b |= ((x >> out[i]) & 1u) << i;
    m[a][b] = psi[x];
  }
  return static_cast<std::size_t>(std::countr_zero(complex_rank(m)));
}

std::vector<std::size_t> region_list(std::uint64_t s, std::size_t n) {
  std::vector<std::size_t> r;
  for (std::size_t q = 0; q < n; ++q) {
    if ((s >> q) & 1u) r.push_back(q);
  }
  return r;
}

void expect_rule_matches_state(const Graph& g, Vertex v, Basis basis) {
  const Graph h = measure_pauli(g, {v, basis, {}});
  const std::size_t m = g.order() - 1;
  ASSERT_EQ(h.order(), m);
  const auto phi = measured_state(g, v, basis);
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << m); ++s) {
    ASSERT_EQ(entanglement_bits(phi, m, s), cut_rank(h, region_list(s, m)))
        << basis_char(basis) << " on " << v << " region " << s;
  }
}

bool edgeless_after(Graph g, const std::vector<MeasurementStep>& steps) {
  for (const auto& step : steps) g = measure_pauli(g, step);
  return is_edgeless(g);
}

}  // namespace

TEST(Measurement, ZDeletesAndIsolatedVerticesVanish) {
  const Graph g = cycle_graph(5);
  EXPECT_EQ(measure_pauli(g, {2, Basis::Z, {}}), delete_vertex(g, 2));
  Graph iso(3);
  iso.add_edge(0, 1);
  for (Basis b : {Basis::X, Basis::Y, Basis::Z}) EXPECT_EQ(measure_pauli(iso, {2, b, {}}), delete_vertex(iso, 2));
  EXPECT_THROW(measure_pauli(g, {5, Basis::Z, {}}), VertexOutOfRange);
  EXPECT_THROW(measure_pauli(g, {0, Basis::X, 2}), VertexOutOfRange);
}

TEST(Measurement, YAndXRulesOnExamples) {
  EXPECT_EQ(measure_pauli(star_graph(4), {0, Basis::Y, {}}), complete_graph(3));
  EXPECT_EQ(measure_pauli(star_graph(4), {0, Basis::X, {}}).edge_count(), 2u);
  EXPECT_TRUE(is_edgeless(measure_pauli(star_graph(4), {0, Basis::Z, {}})));
  EXPECT_EQ(measure_pauli(path_graph(3), {1, Basis::Y, {}}), complete_graph(2));
}

TEST(Measurement, RulesAgreeWithProjectedStates) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : gen::labeled_graphs(n)) {
      for (Vertex v = 0; v < n; ++v) {
        for (Basis b : {Basis::X, Basis::Y, Basis::Z}) expect_rule_matches_state(g, v, b);
      }
    }
  }
  for (const auto& g : gen::graph_classes(7)) {
    for (Vertex v = 0; v < 7; ++v) {
      for (Basis b : {Basis::X, Basis::Y}) expect_rule_matches_state(g, v, b);
    }
  }
}

TEST(Measurement, XNeighbourChoiceGivesLcEquivalentGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : gen::graph_classes(n)) {
      for (Vertex v = 0; v < n; ++v) {
        const auto nbrs = g.neighbor_list(v);
        if (nbrs.size() < 2) continue;
        const Graph first = measure_pauli(g, {v, Basis::X, nbrs.front()});
        for (Vertex b0 : nbrs) ASSERT_TRUE(lc_equivalent(first, measure_pauli(g, {v, Basis::X, b0})));
      }
    }
  }
}

TEST(Persistency, Examples) {
  EXPECT_EQ(pauli_persistency(Graph(4)), 0u);
  EXPECT_EQ(pauli_persistency(star_graph(6)), 1u);
  EXPECT_EQ(pauli_persistency(complete_graph(6)), 1u);
  EXPECT_EQ(pauli_persistency(biclique(3, 3)), 2u);
  EXPECT_EQ(pauli_persistency(path_graph(8)), 4u);
  EXPECT_EQ(pauli_persistency(cycle_graph(5)), 3u);
  const auto k22 = pauli_persistency_search(biclique(2, 2));
  ASSERT_EQ(k22.steps.size(), 2u);
  EXPECT_EQ(k22.steps[0], (MeasurementStep{0, Basis::Z, {}}));
  for (std::size_t m = 3; m <= 5; ++m) {
    const auto res = pauli_persistency_search(biclique(m, m));
    EXPECT_EQ(res.count, 2u);
    EXPECT_EQ(res.steps[0].vertex, 0u);
    EXPECT_EQ(res.steps[0].basis, Basis::X);
  }
}

TEST(Persistency, SequencesDisentangle) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 60; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 8);
    const auto res = pauli_persistency_search(g);
    EXPECT_EQ(res.steps.size(), res.count);
    EXPECT_TRUE(edgeless_after(g, res.steps));
    EXPECT_LE(res.count, pp_z_only(g));
  }
}

TEST(Persistency, ZOnlyIsVertexCover) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 10);
    EXPECT_EQ(pp_z_only(g), oracle::vertex_cover(g));
  }
}

TEST(Persistency, InvariantUnderLocalComplementation) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = gen::random_graph(rng, n);
    EXPECT_EQ(pauli_persistency(local_complement(g, rng() % n)), pauli_persistency(g));
  }
}

TEST(Persistency, AllXNeighboursDoNotChangeTheCount) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : gen::graph_classes(n)) EXPECT_EQ(pauli_persistency(g, {}, true), pauli_persistency(g));
  }
}

TEST(Persistency, LimitIsEnforced) {
  Limits limits;
  limits.pp = 5;
  EXPECT_THROW(pauli_persistency(path_graph(6), limits), ResourceLimit);
}

TEST(SchmidtMeasure, Bounds) {
  const auto star = schmidt_measure_bounds(star_graph(6));
  EXPECT_EQ(star.lower, 1u);
  EXPECT_TRUE(star.tight());
  const auto c5 = schmidt_measure_bounds(cycle_graph(5));
  EXPECT_EQ(c5.lower, 2u);
  EXPECT_EQ(c5.upper, 3u);
  EXPECT_FALSE(c5.tight());
  EXPECT_EQ(schmidt_measure_bounds(biclique(3, 3)).lower, 2u);
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const auto b = schmidt_measure_bounds(gen::random_graph(rng, 1 + rng() % 8));
    EXPECT_LE(b.lower, b.upper);
  }
}
