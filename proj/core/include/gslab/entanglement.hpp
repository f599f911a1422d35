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

#include "gslab/graph.hpp"
#include "gslab/limits.hpp"

namespace gslab {

enum class Basis { X, Y, Z };

char basis_char(Basis b);

struct MeasurementStep {
  Vertex vertex = 0;
  Basis basis = Basis::Z;
  /// Neighbour used by the X rule; lowest neighbour when empty.
  std::optional<Vertex> x_neighbor;
  friend bool operator==(const MeasurementStep&, const MeasurementStep&) = default;
};

/// Graph after measuring one vertex, with the vertex removed and higher labels shifted down.
/// Local corrections are dropped.
Graph measure_pauli(const Graph& g, const MeasurementStep& step);

struct PersistencyResult {
  std::size_t count = 0;
  /// An optimal sequence; each step refers to the labels of the graph it is applied to.
  std::vector<MeasurementStep> steps;
};

/// Fewest measurements reaching an edgeless graph. With all_x_neighbors every neighbour is tried
/// for the X rule instead of the lowest one.
PersistencyResult pauli_persistency_search(const Graph& g, const Limits& limits = {}, bool all_x_neighbors = false);
std::size_t pauli_persistency(const Graph& g, const Limits& limits = {}, bool all_x_neighbors = false);

/// Fewest vertex deletions reaching an edgeless graph (minimum vertex cover).
std::size_t pp_z_only(const Graph& g, const Limits& limits = {});

struct SchmidtMeasureBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool tight() const { return lower == upper; }
};

/// lower: largest cut rank over all bipartitions; upper: Pauli persistency.
SchmidtMeasureBounds schmidt_measure_bounds(const Graph& g, const Limits& limits = {});

}  // namespace gslab
