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
#include <vector>

#include "gslab/graph.hpp"

namespace gslab {

enum class FamilyKind {
  Star,
  Complete,
  Biclique,
  BinaryStar,
  GeneralizedBiclique,
  CrazyGraph,
  RepeaterComplete,
  RepeaterBiclique,
  ImperfectRepeaterComplete,
  ImperfectRepeaterBiclique,
  Path,
  Cycle,
};

/// Family kind plus its integer parameters. Labelings produced by
/// make_family:
///
///   Star(n)                     centre 0, leaves 1..n-1
///   Complete(n)                 K_n
///   Biclique(m[,n])             left block 0..m-1, right block m..m+n-1
///                               (n defaults to m)
///   GeneralizedBiclique(m,n)    same as Biclique(m,n)
///   BinaryStar(n)               adjacent centres 0 and 1; centre 0 takes
///                               ceil((n-2)/2) leaves, centre 1 the rest
///   BinaryStar(p,q)             centre 0 with p-1 leaves (2..p), centre 1
///                               with q-1 leaves (p+1..p+q-1)
///   CrazyGraph(c,m)             c columns of m vertices, column k occupies
///                               k*m..k*m+m-1; adjacent columns are joined
///                               completely
///   CrazyGraph(c,m_0..m_{c-1})  per-column sizes
///   RepeaterComplete(n)         K_n on 0..n-1, leaf n+i on core vertex i
///   RepeaterBiclique(m[,n])     Biclique(m,n) core, leaf m+n+i on core i
///   ImperfectRepeaterComplete(n)     RepeaterComplete(n) without the leaf
///                                    of core vertex 0 (leaves n..2n-2 on
///                                    core vertices 1..n-1)
///   ImperfectRepeaterBiclique(m[,n]) RepeaterBiclique(m,n) without the
///                                    leaves of core vertices 0 and m
///   Path(n), Cycle(n)           vertices in order along the path/cycle
struct FamilySpec {
  FamilyKind kind = FamilyKind::Star;
  std::vector<std::size_t> params;
};

/// Throws InvalidParam when the parameters are out of range.
Graph make_family(const FamilySpec& spec);

/// Convenience constructors.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph biclique(std::size_t m, std::size_t n);
Graph binary_star(std::size_t n);
Graph binary_star(std::size_t p, std::size_t q);
Graph crazy_graph(std::size_t columns, std::size_t per_column);
Graph repeater_complete(std::size_t core);
Graph repeater_biclique(std::size_t m, std::size_t n);
Graph imperfect_repeater_complete(std::size_t core);
Graph imperfect_repeater_biclique(std::size_t m, std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// Kebab-case names used by the CLI, e.g. "binary-star", "repeater-complete".
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_name(std::string_view name);
std::vector<std::string_view> family_names();

}  // namespace gslab
