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
#include <vector>

#include "gslab/bit_matrix.hpp"
#include "gslab/limits.hpp"

namespace gslab {

/// Reduced row echelon form over GF(2). Pivots are taken leftmost-first and
/// the lowest available row is used for each pivot.
struct RowEchelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

RowEchelon row_echelon(BitMatrix m);

std::size_t rank_xor(const BitMatrix& m);

/// Rank of the 0/1 matrix over the rationals (exact, fraction-free).
std::size_t rank_rational(const BitMatrix& m);

/// Basis of the right null space over GF(2); vectors have length m.cols().
std::vector<BitVector> kernel_xor(const BitMatrix& m);

/// All-ones combinatorial rectangle rows x cols.
struct Rectangle {
  BitVector rows;
  BitVector cols;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// Smallest set of all-ones rectangles whose union is the ones of m, if one
/// of size <= cap exists. Throws ResourceLimit when m is beyond the
/// configured search size.
std::optional<std::vector<Rectangle>> minimum_biclique_cover(const BitMatrix& m, std::size_t cap,
                                                             const Limits& limits = {});

/// Smallest set of pairwise disjoint all-ones rectangles partitioning the
/// ones of m, if one of size <= cap exists.
std::optional<std::vector<Rectangle>> minimum_biclique_partition(const BitMatrix& m, std::size_t cap,
                                                                 const Limits& limits = {});

/// Boolean (semiring) rank; nullopt means "exceeds cap".
std::optional<std::size_t> boolean_rank(const BitMatrix& m, std::size_t cap, const Limits& limits = {});

/// Biclique partition number; nullopt means "exceeds cap".
std::optional<std::size_t> biclique_partition_number(const BitMatrix& m, std::size_t cap,
                                                     const Limits& limits = {});

}  // namespace gslab
