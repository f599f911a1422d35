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
#include "gslab/lc.hpp"

#include <array>
#include <deque>
#include <string>
#include <unordered_map>
#include <utility>

#include "gslab/canonical.hpp"
#include "gslab/errors.hpp"
#include "gslab/families.hpp"

namespace gslab {

namespace {

std::string steps_text(const std::vector<Vertex>& steps) {
  std::string out = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(steps[i]);
  }
  return out + "]";
}

std::vector<Vertex> trace_back(const std::vector<std::pair<std::size_t, Vertex>>& parent, std::size_t i) {
  std::vector<Vertex> steps;
  while (i != 0) {
    steps.push_back(parent[i].second);
    i = parent[i].first;
  }
  return {steps.rbegin(), steps.rend()};
}

void check_orbit_size(const Graph& g, const Limits& limits) {
  if (g.order() > limits.orbit_vertices) {
    throw ResourceLimit("orbit search limited to " + std::to_string(limits.orbit_vertices) + " vertices, graph has " +
                        std::to_string(g.order()));
  }
}

// Generic breadth-first orbit walk. key maps a graph to its dedup identity.
template <typename Key, typename Hash, typename KeyFn>
OrbitWalk bfs(const Graph& g, bool up_to_perm, std::size_t budget, KeyFn key,
              const std::function<bool(const Graph&)>& stop) {
  OrbitWalk walk;
  walk.visited.up_to_perm = up_to_perm;
  std::unordered_map<Key, std::size_t, Hash> seen;
  std::vector<std::pair<std::size_t, Vertex>> parent;
  auto& members = walk.visited.members;

  seen.emplace(key(g), 0);
  members.push_back(g);
  parent.emplace_back(0, 0);
  if (stop && stop(g)) {
    walk.hit = 0;
  } else {
    for (std::size_t head = 0; head < members.size() && !walk.hit; ++head) {
      for (Vertex v = 0; v < g.order() && !walk.hit; ++v) {
        Graph next = local_complement(members[head], v);
        auto [it, inserted] = seen.emplace(key(next), members.size());
        if (!inserted) continue;
        if (members.size() >= budget) {
          seen.erase(it);
          walk.visited.witnesses.clear();
          for (std::size_t i = 0; i < members.size(); ++i) walk.visited.witnesses.push_back(trace_back(parent, i));
          return walk;
        }
        members.push_back(std::move(next));
        parent.emplace_back(head, v);
        if (stop && stop(members.back())) walk.hit = members.size() - 1;
      }
    }
    walk.complete = !walk.hit;
  }
  for (std::size_t i = 0; i < members.size(); ++i) walk.visited.witnesses.push_back(trace_back(parent, i));
  return walk;
}

OrbitWalk labeled_walk(const Graph& g, std::size_t budget, const std::function<bool(const Graph&)>& stop) {
  return bfs<Graph, GraphHash>(g, false, budget, [](const Graph& x) { return x; }, stop);
}

}  // namespace

LCSequence::LCSequence(Graph source, std::vector<Vertex> steps, Graph target)
    : source_(std::move(source)), steps_(std::move(steps)), target_(std::move(target)) {
  if (apply_lc_sequence(source_, steps_) != target_) {
    throw InvalidParam("sequence " + steps_text(steps_) + " does not reach the declared target");
  }
}

LCSequence LCSequence::replay(Graph source, std::vector<Vertex> steps) {
  Graph target = apply_lc_sequence(source, steps);
  return LCSequence(std::move(source), std::move(steps), std::move(target));
}

LCSequence LCSequence::reversed() const {
  return LCSequence(target_, std::vector<Vertex>(steps_.rbegin(), steps_.rend()), source_);
}

LCSequence LCSequence::then(const LCSequence& next) const {
  if (next.source_ != target_) throw InvalidParam("sequences do not compose");
  auto steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return LCSequence(source_, std::move(steps), next.target_);
}

std::string LCSequence::to_string() const { return steps_text(steps_); }

Orbit lc_orbit(const Graph& g, bool up_to_perm, const Limits& limits) {
  check_orbit_size(g, limits);
  const std::size_t budget = limits.orbit_members;
  OrbitWalk walk = up_to_perm
                       ? bfs<CanonicalKey, CanonicalKeyHash>(
                             g, true, budget, [&](const Graph& x) { return canonical_key(x, limits); }, {})
                       : labeled_walk(g, budget, {});
  if (!walk.complete) {
    throw ResourceLimit("orbit exceeds " + std::to_string(budget) + " members");
  }
  return std::move(walk.visited);
}

OrbitWalk walk_orbit(const Graph& g, std::size_t budget, const std::function<bool(const Graph&)>& stop) {
  return labeled_walk(g, budget, stop);
}

std::optional<LCSequence> lc_equivalent(const Graph& a, const Graph& b, const Limits& limits) {
  if (a.order() != b.order()) return std::nullopt;
  check_orbit_size(a, limits);
  auto walk = labeled_walk(a, limits.orbit_members, [&](const Graph& x) { return x == b; });
  if (walk.hit) return LCSequence(a, walk.visited.witnesses[*walk.hit], b);
  if (!walk.complete) throw ResourceLimit("orbit exceeds " + std::to_string(limits.orbit_members) + " members");
  return std::nullopt;
}

std::optional<IsomorphicWitness> lc_equivalent_up_to_isomorphism(const Graph& a, const Graph& b,
                                                                 const Limits& limits) {
  if (a.order() != b.order()) return std::nullopt;
  check_orbit_size(a, limits);
  const auto target_key = canonical_key(b, limits);
  auto walk = bfs<CanonicalKey, CanonicalKeyHash>(
      a, true, limits.orbit_members, [&](const Graph& x) { return canonical_key(x, limits); },
      [&](const Graph& x) { return canonical_key(x, limits) == target_key; });
  if (walk.hit) {
    const Graph& reached = walk.visited.members[*walk.hit];
    auto perm = find_isomorphism(reached, b, limits);
    if (!perm) throw Error("canonical keys agree but no isomorphism was found");
    return IsomorphicWitness{LCSequence(a, walk.visited.witnesses[*walk.hit], reached), std::move(*perm)};
  }
  if (!walk.complete) throw ResourceLimit("orbit exceeds " + std::to_string(limits.orbit_members) + " members");
  return std::nullopt;
}

namespace {

constexpr std::array<std::pair<Procedure, std::string_view>, 5> kProcedureNames{{
    {Procedure::StarComplete, "star-complete"},
    {Procedure::BicliqueBinaryStar, "biclique-binary-star"},
    {Procedure::GeneralizedBiclique, "generalized-biclique"},
    {Procedure::ImperfectRepeaterComplete, "imperfect-repeater-complete"},
    {Procedure::ImperfectRepeaterBiclique, "imperfect-repeater-biclique"},
}};

void expect_params(const std::vector<std::size_t>& params, std::size_t count, std::size_t minimum) {
  if (params.size() != count) {
    throw InvalidParam("procedure expects " + std::to_string(count) + " parameters");
  }
  for (auto p : params) {
    if (p < minimum) throw InvalidParam("procedure parameter below " + std::to_string(minimum));
  }
}

}  // namespace

std::string_view procedure_name(Procedure p) {
  for (const auto& [kind, name] : kProcedureNames) {
    if (kind == p) return name;
  }
  return "unknown";
}

std::optional<Procedure> parse_procedure(std::string_view name) {
  for (const auto& [kind, n] : kProcedureNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

LCSequence known_lc_procedure(Procedure p, const std::vector<std::size_t>& params) {
  switch (p) {
    case Procedure::StarComplete: {
      expect_params(params, 1, 3);
      auto seq = LCSequence::replay(star_graph(params[0]), {0});
      if (seq.target() != complete_graph(params[0])) throw Error("star centre complement is not complete");
      return seq;
    }
    case Procedure::BicliqueBinaryStar:
    case Procedure::GeneralizedBiclique: {
      std::size_t m = 0;
      std::size_t n = 0;
      if (p == Procedure::BicliqueBinaryStar) {
        expect_params(params, 1, 2);
        m = n = params[0];
      } else {
        expect_params(params, 2, 1);
        m = params[0];
        n = params[1];
        if (m + n < 3) throw InvalidParam("biclique needs at least 3 vertices");
      }
      auto seq = LCSequence::replay(biclique(m, n), {0, m, 0});
      if (!isomorphic(seq.target(), binary_star(m, n), Limits{.canonical = seq.target().order()})) {
        throw Error("biclique sequence did not reach a binary star");
      }
      return seq;
    }
    case Procedure::ImperfectRepeaterComplete: {
      expect_params(params, 1, 3);
      auto seq = LCSequence::replay(imperfect_repeater_complete(params[0]), {0});
      if (!is_tree(seq.target())) throw Error("imperfect repeater sequence did not reach a tree");
      return seq;
    }
    case Procedure::ImperfectRepeaterBiclique: {
      expect_params(params, 2, 2);
      const std::size_t m = params[0];
      auto seq = LCSequence::replay(imperfect_repeater_biclique(m, params[1]), {0, m, 0});
      if (!is_tree(seq.target())) throw Error("imperfect repeater sequence did not reach a tree");
      return seq;
    }
  }
  throw InvalidParam("unknown procedure");
}

}  // namespace gslab
