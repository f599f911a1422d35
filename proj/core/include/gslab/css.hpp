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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gslab/bit_matrix.hpp"
#include "gslab/limits.hpp"
#include "gslab/stabilizer.hpp"

namespace gslab {

struct ClassicalCode {
  BitMatrix parity_check;
  std::size_t length() const { return parity_check.cols(); }
};

/// [[I_m A | 0 0], [0 0 | A^T I_n]] with A the all-ones m x n block; the biclique stabilizer with
/// Hadamards on the right block.
CheckMatrix biclique_css_form(std::size_t m, std::size_t n);

/// H(C) = [I_m | A]
ClassicalCode biclique_code(std::size_t m, std::size_t n);
/// H(C^perp) = [A^T | I_n]
ClassicalCode biclique_dual_code(std::size_t m, std::size_t n);

/// Minimum weight of a nonzero kernel vector; empty when the kernel is trivial.
std::optional<std::size_t> code_distance(const ClassicalCode& code, const Limits& limits = {});

struct CssClaim {
  std::optional<std::size_t> distance;
  std::optional<std::size_t> dual_distance;
  /// The single-column case argues through the dual code.
  bool dual_branch = false;
  bool holds = false;
};

CssClaim css_claim_check(std::size_t m, std::size_t n, const Limits& limits = {});

std::string to_parity_check_text(const ClassicalCode& code);
ClassicalCode parse_parity_check_text(std::string_view text);

}  // namespace gslab
