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

#include <string>
#include <string_view>

#include "gslab/graph.hpp"

namespace gslab {

inline constexpr std::string_view kGraphFormat = "graphstate/1";

/// {"format": "graphstate/1", "n": ..., "edges": [[u, v], ...]} with u < v in sorted order.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Undirected DOT with every vertex declared.
std::string graph_to_dot(const Graph& g);

}  // namespace gslab
