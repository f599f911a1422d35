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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gslab/graph.hpp"
#include "gslab/limits.hpp"

namespace gslab {

/// A sequence of local complementations together with its endpoints.
class LCSequence {
 public:
  /// Throws InvalidParam unless replaying steps on source gives target.
  LCSequence(Graph source, std::vector<Vertex> steps, Graph target);
  static LCSequence replay(Graph source, std::vector<Vertex> steps);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::vector<Vertex>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  /// The same complementations in reverse order, from target back to source.
  LCSequence reversed() const;
  /// this followed by next; next must start where this ends.
  LCSequence then(const LCSequence& next) const;

  std::string to_string() const;

 private:
  Graph source_;
  std::vector<Vertex> steps_;
  Graph target_;
};

struct Orbit {
  bool up_to_perm = false;
  /// Members in discovery order; members[0] is the start graph.
  std::vector<Graph> members;
  /// witnesses[i] takes the start graph to members[i] (shortest, then lexicographically smallest).
  std::vector<std::vector<Vertex>> witnesses;
  std::size_t size() const { return members.size(); }
};

Orbit lc_orbit(const Graph& g, bool up_to_perm, const Limits& limits = {});

/// Labeled breadth-first walk from g that stops at the first member satisfying stop or after budget
/// members. No vertex limit is applied.
struct OrbitWalk {
  Orbit visited;
  std::optional<std::size_t> hit;
  bool complete = false;
};
OrbitWalk walk_orbit(const Graph& g, std::size_t budget, const std::function<bool(const Graph&)>& stop);

std::optional<LCSequence> lc_equivalent(const Graph& a, const Graph& b, const Limits& limits = {});

struct IsomorphicWitness {
  LCSequence sequence;
  /// relabel(sequence.target(), permutation) == b
  std::vector<Vertex> permutation;
};
std::optional<IsomorphicWitness> lc_equivalent_up_to_isomorphism(const Graph& a, const Graph& b,
                                                                 const Limits& limits = {});

enum class Procedure {
  StarComplete,               // (n)
  BicliqueBinaryStar,         // (m)
  GeneralizedBiclique,        // (m, n)
  ImperfectRepeaterComplete,  // (core)
  ImperfectRepeaterBiclique,  // (m, n)
};

std::string_view procedure_name(Procedure p);
std::optional<Procedure> parse_procedure(std::string_view name);

/// The fixed sequences: star centre; a1, b1, a1 on bicliques; the leafless core vertex; a1, b1, a1 at
/// the two leafless vertices. The expected target shape is checked before returning.
LCSequence known_lc_procedure(Procedure p, const std::vector<std::size_t>& params);

struct Certificate {
  /// 1..6 when a sufficient condition fired, empty for an unknown verdict.
  std::optional<int> result;
  std::optional<LCSequence> witness;
  /// Conditions that could not be evaluated and why.
  std::vector<std::string> skipped;
  bool holds() const { return result.has_value(); }
  std::string verdict() const;
};

/// Tries, in order: at most 8 vertices (1); no 3- or 4-cycles on g or an orbit member (5); the Minimal
/// Support Condition on g (3) and on g without its leaves (4); a star in the orbit (2); support rank
/// below 6 on an orbit member (6).
Certificate lulc_certificate(const Graph& g, const Limits& limits = {});

}  // namespace gslab
