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
#include "gslab/css.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <string>
#include <vector>

#include "gslab/errors.hpp"
#include "gslab/families.hpp"
#include "gslab/gf2.hpp"

namespace gslab {

namespace {

void check_sizes(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw InvalidParam("biclique blocks must be non-empty");
}

}  // namespace

CheckMatrix biclique_css_form(std::size_t m, std::size_t n) {
  check_sizes(m, n);
  const std::size_t total = m + n;
  std::vector<PauliElement> rows;
  for (std::size_t i = 0; i < m; ++i) {
    PauliElement p(total);
    p.set_letter(i, PauliLetter::X);
    for (std::size_t j = 0; j < n; ++j) p.set_letter(m + j, PauliLetter::X);
    rows.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < n; ++j) {
    PauliElement p(total);
    for (std::size_t i = 0; i < m; ++i) p.set_letter(i, PauliLetter::Z);
    p.set_letter(m + j, PauliLetter::Z);
    rows.push_back(std::move(p));
  }
  CheckMatrix css(total, std::move(rows));

  auto conjugated = graph_check_matrix(biclique(m, n));
  for (std::size_t j = 0; j < n; ++j) conjugated = apply_single_qubit_clifford(conjugated, m + j, Gate::H);
  if (!same_stabilizer(css, conjugated)) throw Error("CSS form does not match the conjugated biclique stabilizer");
  return css;
}

ClassicalCode biclique_code(std::size_t m, std::size_t n) {
  check_sizes(m, n);
  return {BitMatrix::identity(m).hconcat(BitMatrix::ones(m, n))};
}

ClassicalCode biclique_dual_code(std::size_t m, std::size_t n) {
  check_sizes(m, n);
  return {BitMatrix::ones(n, m).hconcat(BitMatrix::identity(n))};
}

std::optional<std::size_t> code_distance(const ClassicalCode& code, const Limits& limits) {
  const auto kernel = kernel_xor(code.parity_check);
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() > limits.kernel_dimension) {
    throw ResourceLimit("kernel dimension " + std::to_string(kernel.size()) + " exceeds " +
                        std::to_string(limits.kernel_dimension));
  }
  // Gray-code walk over all nonzero kernel combinations.
  BitVector v(code.length());
  std::size_t best = code.length();
  const std::uint64_t count = std::uint64_t{1} << kernel.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    v ^= kernel[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, v.popcount());
  }
  return best;
}

CssClaim css_claim_check(std::size_t m, std::size_t n, const Limits& limits) {
  CssClaim claim;
  claim.distance = code_distance(biclique_code(m, n), limits);
  claim.dual_distance = code_distance(biclique_dual_code(m, n), limits);
  claim.dual_branch = n == 1;
  const auto& branch = claim.dual_branch ? claim.dual_distance : claim.distance;
  const std::size_t d = claim.distance.value_or(SIZE_MAX);
  const std::size_t dd = claim.dual_distance.value_or(SIZE_MAX);
  claim.holds = branch == std::optional<std::size_t>(2) && std::min(d, dd) == 2;
  return claim;
}

std::string to_parity_check_text(const ClassicalCode& code) {
  std::string out;
  for (std::size_t r = 0; r < code.parity_check.rows(); ++r) {
    out += code.parity_check.row(r).to_string();
    out.push_back('\n');
  }
  return out;
}

ClassicalCode parse_parity_check_text(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.find_first_not_of("01") != std::string::npos) throw ParseError("parity check rows use 0 and 1 only");
    if (!rows.empty() && line.size() != rows.front().size()) throw ParseError("parity check rows differ in length");
    rows.push_back(line);
  }
  if (rows.empty()) throw ParseError("empty parity check matrix");
  return {BitMatrix::from_rows(std::span<const std::string>(rows))};
}

}  // namespace gslab
