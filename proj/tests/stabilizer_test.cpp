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
#include <random>
#include <set>

#include "gslab/gslab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gslab;

namespace {

PauliElement random_pauli(std::mt19937_64& rng, std::size_t n) {
  PauliElement p(n);
  for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<PauliLetter>(rng() % 4));
  p.set_phase(static_cast<std::uint8_t>(rng() % 4));
  return p;
}

oracle::CMatrix dagger(const oracle::CMatrix& m) {
  oracle::CMatrix out(m.size(), std::vector<oracle::Complex>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = std::conj(m[j][i]);
  }
  return out;
}

oracle::CMatrix to_cmatrix(const Matrix2& m) { return {{m[0], m[1]}, {m[2], m[3]}}; }

std::vector<Graph> connected_leafed_classes(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : gen::graph_classes(n)) {
    if (is_connected(g) && !leaves(g).empty()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(Pauli, ParseAndPrint) {
  EXPECT_EQ(PauliElement::parse("+XZZ").to_string(), "+XZZ");
  EXPECT_EQ(PauliElement::parse("-YIY").to_string(), "-YIY");
  EXPECT_EQ(PauliElement::parse("XZ").to_string(), "+XZ");
  EXPECT_EQ(PauliElement::parse("-iZ").phase(), 3);
  EXPECT_EQ(PauliElement::parse("+iZ").phase(), 1);
  EXPECT_EQ(PauliElement::parse("X_Z").weight(), 2u);
  EXPECT_THROW(PauliElement::parse("+XQ"), ParseError);
}

TEST(Pauli, ProductsMatchDenseMatrices) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto a = random_pauli(rng, n);
    const auto b = random_pauli(rng, n);
    const auto ma = oracle::pauli_matrix(a);
    const auto mb = oracle::pauli_matrix(b);
    EXPECT_LT(oracle::max_diff(oracle::pauli_matrix(a * b), oracle::multiply(ma, mb)), 1e-12);
    const bool commute = oracle::max_diff(oracle::multiply(ma, mb), oracle::multiply(mb, ma)) < 1e-12;
    EXPECT_EQ(a.commutes_with(b), commute);
  }
}

TEST(Pauli, YIsIXZ) {
  auto x = PauliElement::parse("X");
  const auto z = PauliElement::parse("Z");
  x *= z;
  EXPECT_EQ(x.to_string(), "-iY");
}

TEST(Clifford, ConjugationTablesMatchGateMatrices) {
  for (auto g : kAllGates) {
    const auto u = to_cmatrix(gate_matrix(g));
    EXPECT_LT(oracle::max_diff(oracle::multiply(u, dagger(u)), oracle::letter_matrix('I')), 1e-12);
    for (char l : {'X', 'Y', 'Z'}) {
      const auto letter = PauliElement::parse(std::string(1, l)).letter(0);
      const auto image = conjugate(g, letter);
      auto expected = oracle::letter_matrix(letter_char(image.letter));
      if (image.negative) {
        for (auto& row : expected) {
          for (auto& v : row) v = -v;
        }
      }
      const auto actual = oracle::multiply(oracle::multiply(u, oracle::letter_matrix(l)), dagger(u));
      EXPECT_LT(oracle::max_diff(actual, expected), 1e-12) << gate_name(g) << " " << l;
      const auto back = conjugate(inverse(g), image.letter);
      EXPECT_EQ(back.letter, letter);
      EXPECT_EQ(back.negative, image.negative);
    }
    EXPECT_EQ(parse_gate(gate_name(g)), std::optional<Gate>(g));
  }
  EXPECT_FALSE(parse_gate("T"));
}

TEST(CheckMatrix, GraphRowsAndValidation) {
  const auto c = graph_check_matrix(path_graph(3));
  EXPECT_EQ(to_stabilizer_text(c), "+XZI\n+ZXZ\n+IZX\n");
  EXPECT_EQ(c.x_block(), BitMatrix::identity(3));
  EXPECT_EQ(c.z_block(), path_graph(3).adjacency());
  const std::vector<std::string> anti{"+XI", "+ZI"};
  EXPECT_THROW(CheckMatrix::from_strings(anti), MalformedCheckMatrix);
  const std::vector<std::string> dependent{"+XX", "+XX"};
  EXPECT_THROW(CheckMatrix::from_strings(dependent), MalformedCheckMatrix);
  const std::vector<std::string> complex_phase{"+iXX", "+ZZ"};
  EXPECT_THROW(CheckMatrix::from_strings(complex_phase), MalformedCheckMatrix);
  const std::vector<std::string> short_list{"+XX"};
  EXPECT_THROW(CheckMatrix::from_strings(short_list), MalformedCheckMatrix);
}

TEST(StabilizerText, RoundTripAndErrors) {
  const std::string text = "+XXX\n+ZZI\n-IZZ\n";
  const auto c = parse_stabilizer_text(text);
  EXPECT_EQ(to_stabilizer_text(c), text);
  EXPECT_EQ(parse_stabilizer_text(to_stabilizer_text(c)), c);
  EXPECT_THROW(parse_stabilizer_text("XX\nZZ\n"), ParseError);
  EXPECT_THROW(parse_stabilizer_text("+XXX\n+ZZI\n"), ParseError);
  EXPECT_THROW(parse_stabilizer_text("+iXX\n+ZZ\n"), ParseError);
  EXPECT_THROW(parse_stabilizer_text(""), ParseError);
}

TEST(Enumerate, EdgeGroupHasFourRealElements) {
  const auto group = enumerate_stabilizer(graph_check_matrix(star_graph(2)));
  std::set<std::string> elements;
  for (const auto& e : group.elements()) elements.insert(e.to_string());
  EXPECT_EQ(elements, (std::set<std::string>{"+II", "+XZ", "+ZX", "+YY"}));
}

TEST(Enumerate, MatchesLetterwiseMatrixProducts) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto c = apply_local_cliffords(graph_check_matrix(gen::random_graph(rng, n)), gen::random_clifford_word(rng, n));
    const auto group = enumerate_stabilizer(c);
    const auto ref = oracle::group_by_matrices(c);
    ASSERT_EQ(group.size(), std::size_t{1} << n);
    for (std::size_t s = 0; s < group.size(); ++s) {
      const auto& e = group.elements()[s];
      std::string letters;
      for (std::size_t q = 0; q < n; ++q) letters.push_back(letter_char(e.letter(q)));
      EXPECT_EQ(letters, ref[s].letters);
      EXPECT_LT(std::abs(std::pow(oracle::Complex(0, 1), static_cast<int>(e.phase())) - ref[s].phase), 1e-12);
      EXPECT_FALSE(e.is_identity() && e.is_negative());
      EXPECT_TRUE(e.is_hermitian());
    }
  }
}

TEST(Enumerate, LimitIsEnforced) {
  Limits limits;
  limits.enumeration = 4;
  EXPECT_THROW(enumerate_stabilizer(graph_check_matrix(path_graph(5)), limits), ResourceLimit);
  EXPECT_THROW(distance(graph_check_matrix(path_graph(5)), limits), ResourceLimit);
}

TEST(Distance, Examples) {
  EXPECT_EQ(distance(graph_check_matrix(Graph(1))), 1u);
  EXPECT_EQ(distance(graph_check_matrix(star_graph(5))), 2u);
  EXPECT_EQ(distance(graph_check_matrix(cycle_graph(5))), 3u);
}

TEST(Distance, LeafedConnectedGraphsHaveDistanceTwo) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : connected_leafed_classes(n)) EXPECT_EQ(distance(graph_check_matrix(g)), 2u);
  }
}

TEST(Distance, InvariantUnderLocalCliffords) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto c = graph_check_matrix(gen::random_graph(rng, n));
    EXPECT_EQ(distance(apply_local_cliffords(c, gen::random_clifford_word(rng, n))), distance(c));
  }
}

TEST(MinimalElements, StarLeavesAndCompletePair) {
  const auto star = minimal_elements(graph_check_matrix(star_graph(4)));
  std::set<std::string> names;
  for (const auto& e : star) names.insert(e.to_string());
  for (const char* leaf : {"+ZXII", "+ZIXI", "+ZIIX"}) EXPECT_TRUE(names.count(leaf)) << leaf;
  EXPECT_EQ(minimal_elements(graph_check_matrix(complete_graph(2))).size(), 3u);
}

TEST(MinimalElements, CycleFiveGolden) {
  std::vector<std::string> names;
  for (const auto& e : minimal_elements(graph_check_matrix(cycle_graph(5)))) names.push_back(e.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"+XZIIZ", "+ZXZII", "+IZXZI", "+IIZXZ", "+YYIXI", "+XIYYI", "+ZIIZX",
                                             "+YIXIY", "+IYYIX", "+IXIYY"}));
  EXPECT_EQ(minimal_subgroup(graph_check_matrix(cycle_graph(5))).size(), 32u);
}

TEST(MinimalElements, MatchSupportInclusionOracle) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const auto c = graph_check_matrix(gen::random_graph(rng, n));
    const auto ref = oracle::group_by_matrices(c);
    std::vector<std::set<std::size_t>> supports;
    for (std::size_t s = 1; s < ref.size(); ++s) {
      std::set<std::size_t> sup;
      for (std::size_t q = 0; q < n; ++q) {
        if (ref[s].letters[q] != 'I') sup.insert(q);
      }
      supports.push_back(sup);
    }
    std::multiset<std::string> expected;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < supports.size() && minimal; ++j) {
        if (supports[j].size() < supports[i].size() &&
            std::includes(supports[i].begin(), supports[i].end(), supports[j].begin(), supports[j].end())) {
          minimal = false;
        }
      }
      if (minimal) expected.insert(ref[i + 1].letters);
    }
    std::multiset<std::string> actual;
    for (const auto& e : minimal_elements(c)) {
      std::string letters;
      for (std::size_t q = 0; q < n; ++q) letters.push_back(letter_char(e.letter(q)));
      actual.insert(letters);
    }
    EXPECT_EQ(actual, expected);
  }
}

TEST(Msc, Examples) {
  EXPECT_FALSE(check_msc(star_graph(4)));
  EXPECT_FALSE(check_msc(complete_graph(5)));
  EXPECT_TRUE(check_msc(cycle_graph(5)));
  EXPECT_TRUE(check_msc(complete_graph(2)));
  Graph two_edges(4);
  two_edges.add_edge(0, 1);
  two_edges.add_edge(2, 3);
  EXPECT_THROW(check_msc(two_edges), DisconnectedGraph);
  EXPECT_THROW(check_msc(graph_check_matrix(two_edges)), DisconnectedGraph);
}

TEST(Msc, FailsForEveryLeafedGraphFromThreeVertices) {
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& g : connected_leafed_classes(n)) EXPECT_FALSE(check_msc(g));
  }
}

TEST(Msc, InvariantUnderLocalCliffords) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = gen::random_graph(rng, n, 0.6);
    if (!is_connected(g)) continue;
    const auto c = apply_local_cliffords(graph_check_matrix(g), gen::random_clifford_word(rng, n));
    EXPECT_EQ(check_msc(c), check_msc(g));
  }
}

TEST(StateVector, StarIsGhzLike) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto psi = graph_state_vector(star_graph(n));
    for (std::size_t x = 0; x < psi.size(); ++x) {
      const bool centre = x & 1u;
      const int leaf_ones = std::popcount(x >> 1);
      const double sign = (centre && (leaf_ones % 2)) ? -1.0 : 1.0;
      EXPECT_NEAR(psi[x].real(), sign / std::sqrt(static_cast<double>(psi.size())), 1e-12);
    }
  }
}

TEST(StateVector, TriangleSignsAndEmptyGraph) {
  const auto psi = graph_state_vector(complete_graph(3));
  std::vector<std::size_t> negative;
  for (std::size_t x = 0; x < 8; ++x) {
    if (psi[x].real() < 0) negative.push_back(x);
  }
  EXPECT_EQ(negative, (std::vector<std::size_t>{3, 5, 6, 7}));
  for (const auto& a : graph_state_vector(Graph(3))) EXPECT_NEAR(a.real(), 1.0 / std::sqrt(8.0), 1e-15);
}

TEST(StateVector, GraphFormulaMatchesCzCircuit) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 8);
    EXPECT_LT(max_abs_diff(graph_state_vector(g), oracle::cz_graph_state(g)), 1e-12);
    EXPECT_LT(max_abs_diff(state_vector(graph_check_matrix(g)), oracle::cz_graph_state(g)), 1e-12);
  }
}

TEST(StateVector, ProjectorStateIsStabilized) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto c = apply_local_cliffords(graph_check_matrix(gen::random_graph(rng, n)), gen::random_clifford_word(rng, n));
    const auto psi = state_vector(c);
    for (const auto& row : c.rows()) EXPECT_LT(max_abs_diff(oracle::apply(oracle::pauli_matrix(row), psi), psi), 1e-12);
    double norm = 0;
    for (const auto& a : psi) norm += std::norm(a);
    EXPECT_NEAR(norm, 1.0, 1e-12);
  }
}

TEST(StateVector, GatesMatchCheckMatrixConjugation) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = gen::random_graph(rng, n);
    const auto word = gen::random_clifford_word(rng, n);
    auto psi = graph_state_vector(g);
    for (const auto& gate : word) apply_gate(psi, gate.qubit, gate.gate);
    const auto expected = state_vector(apply_local_cliffords(graph_check_matrix(g), word));
    EXPECT_LT(max_abs_diff_up_to_phase(psi, expected), 1e-12);
  }
}

TEST(StateVector, LimitIsEnforced) {
  Limits limits;
  limits.statevec = 3;
  EXPECT_THROW(graph_state_vector(path_graph(4), limits), ResourceLimit);
}

TEST(MinusSigns, Examples) {
  EXPECT_EQ(minus_sign_count(Graph(4)), 0u);
  EXPECT_EQ(minus_sign_count(complete_graph(3)), 4u);
  EXPECT_EQ(minus_sign_count(biclique(2, 2)), 4u);
}

TEST(SupportSubgroup, Examples) {
  const auto c = graph_check_matrix(biclique(2, 2));
  const std::vector<std::size_t> left{0, 1};
  const auto sub = support_subgroup(c, left);
  ASSERT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub.elements()[1].to_string(), "+XXII");
  EXPECT_EQ(support_subgroup(c, gen::range(0, 4)).size(), 16u);
  EXPECT_EQ(support_subgroup(c, std::vector<std::size_t>{}).size(), 1u);
}

TEST(SchmidtRank, ExamplesAndErrors) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(schmidt_rank(biclique(m, n), gen::range(0, m)), 1u);
  }
  EXPECT_EQ(schmidt_rank(biclique(2, 2), std::vector<std::size_t>{0, 1}), 1u);
  EXPECT_EQ(schmidt_rank(path_graph(2), std::vector<std::size_t>{0}), 1u);
  EXPECT_THROW(schmidt_rank(path_graph(3), std::vector<std::size_t>{}), InvalidPartition);
  EXPECT_THROW(schmidt_rank(path_graph(3), gen::range(0, 3)), InvalidPartition);
  EXPECT_THROW(schmidt_rank(path_graph(3), std::vector<std::size_t>{0, 0}), InvalidPartition);
  EXPECT_THROW(schmidt_rank(path_graph(3), std::vector<std::size_t>{5}), InvalidPartition);
}

TEST(SchmidtRank, EqualsCutRankOfAdjacencyBlock) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : gen::graph_classes(n)) {
      for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
        std::vector<std::size_t> region;
        for (std::size_t v = 0; v < n; ++v) {
          if ((s >> v) & 1u) region.push_back(v);
        }
        ASSERT_EQ(schmidt_rank(g, region), cut_rank(g, region));
      }
    }
  }
}

TEST(LocalCliffords, HadamardEverywhereSwapsBlocks) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen::random_graph(rng, 1 + rng() % 7);
    auto c = graph_check_matrix(g);
    for (std::size_t q = 0; q < g.order(); ++q) c = apply_single_qubit_clifford(c, q, Gate::H);
    EXPECT_EQ(c.x_block(), g.adjacency());
    EXPECT_EQ(c.z_block(), BitMatrix::identity(g.order()));
  }
}

TEST(LocalCliffords, HadamardOnLeavesGivesGhz) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto c = graph_check_matrix(star_graph(n));
    for (std::size_t q = 1; q < n; ++q) c = apply_single_qubit_clifford(c, q, Gate::H);
    std::vector<std::string> rows{"+" + std::string(n, 'X')};
    for (std::size_t q = 0; q + 1 < n; ++q) {
      std::string r(n, 'I');
      r[q] = r[q + 1] = 'Z';
      rows.push_back("+" + r);
    }
    EXPECT_TRUE(same_stabilizer(c, CheckMatrix::from_strings(rows)));
    const auto psi = state_vector(c);
    EXPECT_NEAR(psi.front().real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(psi.back().real(), 1 / std::sqrt(2.0), 1e-12);
  }
}

TEST(LocalCliffords, PauliZFlipsSignsOfAnticommutingElements) {
  const auto c = graph_check_matrix(cycle_graph(5));
  const auto flipped = apply_single_qubit_clifford(c, 2, Gate::Z);
  const auto before = enumerate_stabilizer(c).elements();
  const auto after = enumerate_stabilizer(flipped).elements();
  for (std::size_t s = 0; s < before.size(); ++s) {
    EXPECT_EQ(before[s].symplectic(), after[s].symplectic());
    const bool anticommutes = before[s].xbits().get(2);
    EXPECT_EQ(before[s].phase() != after[s].phase(), anticommutes);
  }
  EXPECT_FALSE(same_stabilizer(c, flipped));
}

TEST(LocalCliffords, LcGatesRealiseLocalComplementation) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : gen::graph_classes(n)) {
      for (Vertex a = 0; a < n; ++a) {
        const auto c = apply_local_cliffords(graph_check_matrix(g), lc_gates(g, a));
        ASSERT_TRUE(same_stabilizer(c, graph_check_matrix(local_complement(g, a))));
      }
    }
  }
}

TEST(ProductFactors, SplitsDisconnectedStates) {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  std::mt19937_64 rng(19);
  const auto c = apply_local_cliffords(graph_check_matrix(g), gen::random_clifford_word(rng, 5));
  const auto parts = product_factors(c);
  EXPECT_EQ(parts, (std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}, {4}}));
  const std::vector<std::string> ghz{"+XXX", "+ZZI", "+IZZ"};
  EXPECT_EQ(product_factors(CheckMatrix::from_strings(ghz)).size(), 1u);
}
