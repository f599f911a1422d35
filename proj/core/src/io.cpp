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
#include "gslab/io.hpp"

#include <string>
#include <vector>

#include "json.hpp"

#include "gslab/errors.hpp"

namespace gslab {

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["format"] = kGraphFormat;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump() + "\n";
}

Graph graph_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  if (j.contains("format") && j["format"] != kGraphFormat) {
    throw ParseError("unsupported graph format " + j["format"].dump());
  }
  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("graph JSON needs a non-negative \"n\"");
  if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph JSON needs an \"edges\" array");
  const auto n = j["n"].get<std::size_t>();
  Graph g(n);
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("edge must be a pair of vertex indices: " + e.dump());
    }
    const auto u = e[0].get<std::size_t>();
    const auto v = e[1].get<std::size_t>();
    if (u >= n || v >= n) throw ParseError("edge " + e.dump() + " out of range");
    if (u == v) throw ParseError("self loop " + e.dump());
    if (g.has_edge(u, v)) throw ParseError("duplicate edge " + e.dump());
    g.add_edge(u, v);
  }
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

}  // namespace gslab
