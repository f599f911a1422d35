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

namespace gslab {

/// Size limits for the exhaustive searches. Exceeding any of them raises
/// ResourceLimit.
struct Limits {
  /// Max qubits for materializing all 2^n stabilizer elements.
  std::size_t enumeration = 16;
  /// Max qubits for dense amplitude tables.
  std::size_t statevec = 14;
  /// Max vertices for LC-orbit enumeration.
  std::size_t orbit_vertices = 12;
  /// Max members collected by a single orbit search.
  std::size_t orbit_members = 500000;
  /// Max vertices for Pauli-persistency search.
  std::size_t pp = 12;
  /// Default cap for Boolean rank / biclique partition search.
  std::size_t bp_cap = 8;
  /// Max vertices for exact canonical labeling.
  std::size_t canonical = 12;
  /// Graphs visited by the certificate's orbit walk before giving up.
  std::size_t certificate_budget = 20000;
  /// Max ones in a matrix handed to the cover/partition searches.
  std::size_t bp_max_ones = 40;
  /// Max kernel dimension for exhaustive code-distance search.
  std::size_t kernel_dimension = 24;
};

}  // namespace gslab
