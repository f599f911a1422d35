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

#include <random>

#include "gslab/gslab.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gslab;

namespace {

CheckMatrix hadamard_side(const Graph& g, std::size_t lo, std::size_t hi) {
  auto c = graph_check_matrix(g);
  for (std::size_t q = lo; q < hi; ++q) c = apply_single_qubit_clifford(c, q, Gate::H);
  return c;
}

}  // namespace

TEST(CssForm, RowsArePureAndLocallyEquivalent) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      if (m + n < 2) continue;
      const auto css = biclique_css_form(m, n);
      ASSERT_EQ(css.num_qubits(), m + n);
      for (const auto& row : css.rows()) {
        EXPECT_TRUE(row.xbits().none() || row.zbits().none()) << row.to_string();
        EXPECT_FALSE(row.is_negative());
      }
      const Graph g = biclique(m, n);
      EXPECT_TRUE(same_stabilizer(css, hadamard_side(g, 0, m)) || same_stabilizer(css, hadamard_side(g, m, m + n)));
    }
  }
}

TEST(ClassicalCodes, BicliqueParityChecks) {
  const auto code = biclique_code(2, 3);
  EXPECT_EQ(to_parity_check_text(code), "10111\n01111\n");
  EXPECT_EQ(code.length(), 5u);
  EXPECT_EQ(to_parity_check_text(biclique_dual_code(2, 3)), "11100\n11010\n11001\n");
}

TEST(ClassicalCodes, DistanceMatchesExhaustiveSearch) {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 12;
    BitMatrix h(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) h.set(i, j, rng() % 2);
    }
    EXPECT_EQ(code_distance(ClassicalCode{h}), oracle::code_distance(oracle::dense(h)));
  }
  EXPECT_EQ(code_distance(ClassicalCode{BitMatrix::identity(4)}), std::nullopt);
}

TEST(ClassicalCodes, KernelLimit) {
  Limits limits;
  limits.kernel_dimension = 3;
  EXPECT_THROW(code_distance(ClassicalCode{BitMatrix(1, 6)}, limits), ResourceLimit);
}

TEST(CssClaim, DistanceTwoAcrossShapes) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto claim = css_claim_check(m, n);
      EXPECT_TRUE(claim.holds) << m << "," << n;
      EXPECT_EQ(claim.dual_branch, n == 1);
      EXPECT_EQ(claim.distance, oracle::code_distance(oracle::dense(biclique_code(m, n).parity_check)));
      EXPECT_EQ(claim.dual_distance, oracle::code_distance(oracle::dense(biclique_dual_code(m, n).parity_check)));
    }
  }
  const auto single = css_claim_check(3, 1);
  EXPECT_EQ(single.distance, std::optional<std::size_t>(4));
  EXPECT_EQ(single.dual_distance, std::optional<std::size_t>(2));
  EXPECT_TRUE(css_claim_check(1, 1).holds);
}

TEST(ParityCheckText, RoundTripAndErrors) {
  const auto code = biclique_code(3, 2);
  EXPECT_EQ(parse_parity_check_text(to_parity_check_text(code)).parity_check, code.parity_check);
  EXPECT_EQ(parse_parity_check_text("101\n\n011\n").parity_check.rows(), 2u);
  EXPECT_THROW(parse_parity_check_text("101\n01\n"), ParseError);
  EXPECT_THROW(parse_parity_check_text("1a1\n"), ParseError);
  EXPECT_THROW(parse_parity_check_text(""), ParseError);
}
