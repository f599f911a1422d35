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
#include "acceptance.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "gslab/gslab.hpp"

namespace gslab::acceptance {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }

  CriterionResult finish(int id, const std::string& title) const {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.passed = failed == 0 && checked > 0;
    r.detail = std::to_string(checked) + " checks";
    if (failed) r.detail += ", " + std::to_string(failed) + " failed; first: " + first_failure;
    return r;
  }
};

std::string name_of(const std::string& family, std::initializer_list<std::size_t> params) {
  std::string s = family + "(";
  bool first = true;
  for (auto p : params) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + ")";
}

template <typename Fn>
void for_each_labeled_graph(std::size_t n, Fn fn) {
  const std::size_t pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g(n);
    std::size_t k = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v, ++k) {
        if ((mask >> k) & 1u) g.add_edge(u, v);
      }
    }
    fn(g);
  }
}

// One representative per isomorphism class, for every order up to max_n.
std::vector<std::vector<Graph>> graph_classes(std::size_t max_n) {
  std::vector<std::vector<Graph>> by_order(max_n + 1);
  by_order[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (const auto& h : by_order[n - 1]) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        Graph g(n);
        for (const auto& [u, v] : h.edges()) g.add_edge(u, v);
        for (Vertex u = 0; u + 1 < n; ++u) {
          if ((nb >> u) & 1u) g.add_edge(u, n - 1);
        }
        if (seen.insert(canonical_key(g)).second) by_order[n].push_back(std::move(g));
      }
    }
  }
  return by_order;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n) {
  Graph g(n);
  std::bernoulli_distribution coin(0.5);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

CriterionResult lc_rule(const Limits&) {
  Tally t;
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      const auto c = graph_check_matrix(g);
      for (Vertex a = 0; a < n; ++a) {
        const auto gates = lc_gates(g, a);
        const bool ok = same_stabilizer(apply_local_cliffords(c, gates), graph_check_matrix(local_complement(g, a)));
        t.expect(ok, "n=" + std::to_string(n) + " edges=" + std::to_string(g.edge_count()) + " a=" + std::to_string(a));
      }
    });
  }
  return t.finish(1, "LC gate conjugation equals local complementation (all graphs n<=6)");
}

CriterionResult star_complete_ghz(const Limits& limits) {
  Tally t;
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto label = name_of("Star", {n});
    const auto seq = known_lc_procedure(Procedure::StarComplete, {n});
    t.expect(seq.steps() == std::vector<Vertex>{0} && seq.target() == complete_graph(n), label + " -> Complete");
    const auto found = lc_equivalent(star_graph(n), complete_graph(n), limits);
    t.expect(found && found->steps() == std::vector<Vertex>{0}, label + " shortest witness");

    Limits sv = limits;
    sv.statevec = std::max<std::size_t>(sv.statevec, n);
    auto psi = graph_state_vector(star_graph(n), sv);
    for (std::size_t q = 1; q < n; ++q) apply_gate(psi, q, Gate::H);
    Amplitudes ghz(psi.size(), 0.0);
    ghz.front() = ghz.back() = 1.0 / std::sqrt(2.0);
    t.expect(max_abs_diff(psi, ghz) <= 1e-12, label + " H on leaves gives GHZ amplitudes");

    auto c = graph_check_matrix(star_graph(n));
    for (std::size_t q = 1; q < n; ++q) c = apply_single_qubit_clifford(c, q, Gate::H);
    std::vector<std::string> rows{std::string(n, 'X')};
    for (std::size_t q = 0; q + 1 < n; ++q) {
      std::string r(n, 'I');
      r[q] = r[q + 1] = 'Z';
      rows.push_back(r);
    }
    for (auto& r : rows) r = "+" + r;
    t.expect(same_stabilizer(c, CheckMatrix::from_strings(rows)), label + " H on leaves gives GHZ stabilizer");
  }
  return t.finish(2, "Star <-> Complete by one LC at the centre; Hadamards map star to GHZ (n<=10)");
}

CriterionResult biclique_binary_star(const Limits& limits) {
  Tally t;
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto label = name_of("Biclique", {m, m});
    const auto seq = known_lc_procedure(Procedure::BicliqueBinaryStar, {m});
    t.expect(seq.steps() == std::vector<Vertex>{0, m, 0}, label + " sequence [a1,b1,a1]");
    Limits canon = limits;
    canon.canonical = std::max(canon.canonical, 2 * m);
    t.expect(isomorphic(seq.target(), binary_star(2 * m), canon), label + " target is BinaryStar(2m)");
    t.expect(!has_short_cycle(seq.target()), label + " target has no 3- or 4-cycles");
  }
  const auto seq = known_lc_procedure(Procedure::GeneralizedBiclique, {3, 5});
  t.expect(seq.steps() == std::vector<Vertex>{0, 3, 0}, "Biclique(3,5) sequence");
  t.expect(isomorphic(seq.target(), binary_star(3, 5), limits), "Biclique(3,5) target is a generalized binary star");
  t.expect(is_tree(seq.target()), "Biclique(3,5) target is a tree");
  return t.finish(3, "[a1,b1,a1] takes Biclique(m,m) to BinaryStar(2m) (m<=6) and Biclique(3,5) to a binary star");
}

CriterionResult complete_orbit(const Limits& limits) {
  Tally t;
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto orbit = lc_orbit(complete_graph(n), true, limits);
    t.expect(orbit.size() == 2, name_of("Complete", {n}) + " orbit size " + std::to_string(orbit.size()));
    bool has_star = false;
    for (const auto& g : orbit.members) has_star = has_star || isomorphic(g, star_graph(n), limits);
    t.expect(has_star, name_of("Complete", {n}) + " orbit contains the star");
  }
  return t.finish(4, "LC orbit of Complete(n) up to relabeling has exactly 2 members (4<=n<=8)");
}

CriterionResult msc_failures(const Limits& limits) {
  Tally t;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 3; n <= 8; ++n) {
    graphs.emplace_back(name_of("Star", {n}), star_graph(n));
    graphs.emplace_back(name_of("Complete", {n}), complete_graph(n));
    if (n >= 4) graphs.emplace_back(name_of("BinaryStar", {n}), binary_star(n));
    for (std::size_t m = 1; m < n; ++m) graphs.emplace_back(name_of("Biclique", {m, n - m}), biclique(m, n - m));
  }
  for (std::size_t core = 2; core <= 4; ++core) {
    graphs.emplace_back(name_of("RepeaterComplete", {core}), repeater_complete(core));
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; m + n <= 4; ++n) {
      graphs.emplace_back(name_of("RepeaterBiclique", {m, n}), repeater_biclique(m, n));
    }
  }
  std::size_t leafed = 0;
  for (const auto& [label, g] : graphs) {
    t.expect(!check_msc(g, limits), label + " satisfies the MSC");
    if (!leaves(g).empty()) {
      ++leafed;
      t.expect(distance(graph_check_matrix(g), limits) == 2, label + " distance is not 2");
    }
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_connected(g) || leaves(g).empty()) return;
      ++leafed;
      t.expect(distance(graph_check_matrix(g), limits) == 2, "leafed graph n=" + std::to_string(n) + " distance");
      t.expect(!check_msc(g, limits), "leafed graph n=" + std::to_string(n) + " satisfies the MSC");
    });
  }
  t.expect(leafed > 0, "no leafed graphs tested");
  return t.finish(5, "MSC fails for star/complete/biclique/binary-star/repeater families (n<=8); leafed graphs have distance 2");
}

CriterionResult imperfect_repeaters(const Limits& limits) {
  Tally t;
  for (std::size_t core = 5; core <= 7; ++core) {
    const auto label = name_of("ImperfectRepeaterComplete", {core});
    const auto seq = known_lc_procedure(Procedure::ImperfectRepeaterComplete, {core});
    t.expect(!has_short_cycle(seq.target()), label + " target has short cycles");
    const auto cert = lulc_certificate(imperfect_repeater_complete(core), limits);
    t.expect(cert.result == 5, label + " certificate " + cert.verdict());
    t.expect(cert.witness && !has_short_cycle(cert.witness->target()), label + " certificate witness");
  }
  for (std::size_t m = 3; m <= 5; ++m) {
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto label = name_of("ImperfectRepeaterBiclique", {m, n});
      const auto seq = known_lc_procedure(Procedure::ImperfectRepeaterBiclique, {m, n});
      t.expect(!has_short_cycle(seq.target()), label + " target has short cycles");
      const auto cert = lulc_certificate(imperfect_repeater_biclique(m, n), limits);
      t.expect(cert.result == 5, label + " certificate " + cert.verdict());
      t.expect(cert.witness && !has_short_cycle(cert.witness->target()), label + " certificate witness");
    }
  }
  return t.finish(6, "Imperfect repeaters reach 3/4-cycle-free graphs and certify by result 5");
}

CriterionResult css_claim(const Limits& limits) {
  Tally t;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto label = name_of("CSS", {m, n});
      const auto claim = css_claim_check(m, n, limits);
      t.expect(claim.holds, label + " min distance is not 2");
      t.expect(claim.dual_branch == (n == 1), label + " branch");
      if (n >= 2) t.expect(claim.distance == std::optional<std::size_t>(2), label + " distance");
      if (n == 1) t.expect(claim.dual_distance == std::optional<std::size_t>(2), label + " dual distance");
      if (m + n <= 8) {
        auto conj = graph_check_matrix(biclique(m, n));
        for (std::size_t j = 0; j < n; ++j) conj = apply_single_qubit_clifford(conj, m + j, Gate::H);
        const bool same = enumerate_stabilizer(biclique_css_form(m, n), limits)
                              .same_elements(enumerate_stabilizer(conj, limits));
        t.expect(same, label + " CSS form group");
      }
    }
  }
  return t.finish(7, "Biclique CSS codes have distance or dual distance 2 (1<=m,n<=5); dual branch iff n=1");
}

CriterionResult crazy_graphs(const Limits& limits) {
  Tally t;
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto label = name_of("CrazyGraph", {3, m});
    const Graph crazy = crazy_graph(3, m);
    const Graph bic = biclique(2 * m, m);
    t.expect(canonical_key(crazy, limits) == canonical_key(bic, limits), label + " canonical key");
    const auto perm = find_isomorphism(crazy, bic, limits);
    t.expect(perm.has_value(), label + " isomorphism");
    if (!perm) continue;
    const auto seq = known_lc_procedure(Procedure::GeneralizedBiclique, {2 * m, m});
    std::vector<Vertex> inverse(crazy.order());
    for (Vertex v = 0; v < crazy.order(); ++v) inverse[(*perm)[v]] = v;
    std::vector<Vertex> steps;
    for (auto s : seq.steps()) steps.push_back(inverse[s]);
    const auto mapped = LCSequence::replay(crazy, steps);
    t.expect(!has_short_cycle(mapped.target()), label + " biclique sequence leaves short cycles");
    const auto cert = lulc_certificate(crazy, limits);
    t.expect(cert.holds(), label + " certificate " + cert.verdict());
  }
  return t.finish(8, "CrazyGraph(3,m) is Biclique(2m,m) up to relabeling and certifies through it (m<=4)");
}

CriterionResult persistency(const Limits& limits) {
  Tally t;
  for (std::size_t n = 3; n <= 8; ++n) {
    t.expect(pauli_persistency(star_graph(n), limits) == 1, name_of("PP Star", {n}));
    t.expect(pauli_persistency(complete_graph(n), limits) == 1, name_of("PP Complete", {n}));
  }
  for (std::size_t m = 2; m <= 5; ++m) {
    t.expect(pauli_persistency(binary_star(2 * m), limits) == 2, name_of("PP BinaryStar", {2 * m}));
    t.expect(pauli_persistency(biclique(m, m), limits) == 2, name_of("PP Biclique", {m, m}));
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    t.expect(pauli_persistency(path_graph(n), limits) == n / 2, name_of("PP Path", {n}));
  }

  const auto classes = graph_classes(8);
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> pp;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : classes[n]) pp.emplace(canonical_key(g, limits), pauli_persistency(g, limits));
  }
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : classes[n]) {
      const std::size_t value = pp.at(canonical_key(g, limits));
      for (Vertex v = 0; v < n; ++v) {
        const auto it = pp.find(canonical_key(local_complement(g, v), limits));
        t.expect(it != pp.end() && it->second == value,
                 "PP changes under LC, n=" + std::to_string(n) + " edges=" + std::to_string(g.edge_count()));
      }
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : classes[n]) {
      if (!is_tree(g)) continue;
      const std::size_t p = pauli_persistency(g, limits);
      const auto b = schmidt_measure_bounds(g, limits);
      t.expect(p == pp_z_only(g, limits) && b.tight() && b.upper == p,
               "tree n=" + std::to_string(n) + " PP=" + std::to_string(p));
    }
  }
  return t.finish(9, "Pauli persistency values, LC invariance (n<=7) and tree coincidence (n<=8)");
}

CriterionResult rank_relations(const Limits& limits) {
  Tally t;
  auto check = [&](const Graph& g, const std::vector<std::size_t>& region, const std::string& label, bool is_biclique) {
    const auto rep = verify_rank_relations(g, region, limits);
    t.expect(rep.all_hold(), label + " relations");
    t.expect(rep.rank_chain && rep.rational_equals_bp, label + " rank chain");
    if (is_biclique) t.expect(rep.rank_xor == 1 && rep.bp == std::optional<std::size_t>(1), label + " biclique ranks");
  };
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t n = 1; m + n <= 8; ++n) {
      std::vector<std::size_t> left(m);
      for (std::size_t i = 0; i < m; ++i) left[i] = i;
      check(biclique(m, n), left, name_of("Biclique", {m, n}), true);
    }
  }
  std::mt19937_64 rng(0x5eed0010);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 7)(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (Vertex u = 0; u < r; ++u) {
      for (Vertex v = r; v < n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    std::vector<std::size_t> region(r);
    for (std::size_t k = 0; k < r; ++k) region[k] = k;
    check(g, region, "random bipartite #" + std::to_string(i), false);
  }
  return t.finish(10, "Minus-sign, subgroup-order and biclique-partition relations (bicliques m+n<=8, 200 random)");
}

CriterionResult reduction_soundness(const Limits& limits) {
  Tally t;
  std::mt19937_64 rng(0x5eed0011);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Graph source = random_graph(rng, n);
    std::vector<LocalGate> word;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
      for (std::size_t k = 0; k < len; ++k) {
        word.push_back({q, kAllGates[std::uniform_int_distribution<std::size_t>(0, kAllGates.size() - 1)(rng)]});
      }
    }
    const auto c = apply_local_cliffords(graph_check_matrix(source), word);
    const auto label = "random #" + std::to_string(i) + " n=" + std::to_string(n);
    const auto red = reduce_to_graph(c, limits);
    const auto orbit = lc_orbit(source, false, limits);
    bool member = false;
    for (const auto& g : orbit.members) member = member || g == red.graph;
    t.expect(member, label + " reduced graph outside the LC orbit");
    const auto dec = decompose_state(c, limits);
    t.expect(max_abs_diff(reconstruct_amplitudes(dec), state_vector(c, limits)) < 1e-12, label + " decomposition");
  }
  return t.finish(11, "Reduction lands in the source LC orbit and the decomposition reconstructs (200 random, n<=7)");
}

CriterionResult edge_counts(const Limits&) {
  Tally t;
  for (std::size_t n = 2; n <= 12; ++n) {
    t.expect(repeater_complete(n).edge_count() == n * (n + 1) / 2, name_of("RepeaterComplete", {n}));
  }
  for (std::size_t n = 2; n <= 12; n += 2) {
    const std::size_t saving = repeater_complete(n).edge_count() - repeater_biclique(n / 2, n / 2).edge_count();
    t.expect(saving == n * (n - 2) / 4, name_of("biclique saving", {n}));
  }
  return t.finish(12, "Repeater edge counts n(n+1)/2 and biclique saving n(n-2)/4 (n<=12)");
}

CriterionResult open_repeater(const Limits& limits) {
  Tally t;
  const auto cert = lulc_certificate(repeater_complete(10), limits);
  t.expect(!cert.holds(), "RepeaterComplete(10) certified as " + cert.verdict());
  return t.finish(13, "RepeaterComplete(10) stays UNKNOWN");
}

}  // namespace

std::vector<Criterion> criteria(const Limits& limits) {
  using Fn = CriterionResult (*)(const Limits&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"lc-rule", lc_rule},
      {"star-complete-ghz", star_complete_ghz},
      {"biclique-binary-star", biclique_binary_star},
      {"complete-orbit", complete_orbit},
      {"msc-failures", msc_failures},
      {"imperfect-repeaters", imperfect_repeaters},
      {"css-distance", css_claim},
      {"crazy-graphs", crazy_graphs},
      {"persistency", persistency},
      {"rank-relations", rank_relations},
      {"reduction", reduction_soundness},
      {"edge-counts", edge_counts},
      {"open-repeater", open_repeater},
  };
  std::vector<Criterion> out;
  int id = 1;
  for (const auto& [title, fn] : table) {
    out.push_back({id++, title, [fn, limits] { return fn(limits); }});
  }
  return out;
}

std::vector<CriterionResult> run_all(const Limits& limits) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria(limits)) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.id = c.id;
      r.title = c.key;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  (" << r.detail
      << ", " << std::fixed << std::setprecision(2) << r.seconds << " s)";
  return out.str();
}

}  // namespace gslab::acceptance
