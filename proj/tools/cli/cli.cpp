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
#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "gslab/gslab.hpp"

namespace gslab::cli {

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph read_graph(const std::string& path) { return graph_from_json(read_text(path)); }

std::vector<std::size_t> parse_part(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("--part expects comma-separated vertex indices, got '" + text + "'");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

std::string format_graph(const Graph& g, const std::string& format) {
  if (format == "dot") return graph_to_dot(g);
  if (format == "text") {
    std::string s = "n " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
  }
  return graph_to_json(g);
}

std::string steps_text(const std::vector<Vertex>& steps) {
  std::string s = "[";
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + std::to_string(steps[i]);
  return s + "]";
}

std::size_t env_limit(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || std::stoul(text) == 0) {
    throw ParseError(std::string(name) + " must be a positive integer");
  }
  return std::stoul(text);
}

}  // namespace

Limits limits_from_env() {
  Limits l;
  l.enumeration = env_limit("GSLAB_ENUM_LIMIT", l.enumeration);
  l.statevec = env_limit("GSLAB_STATEVEC_LIMIT", l.statevec);
  l.orbit_vertices = env_limit("GSLAB_ORBIT_LIMIT", l.orbit_vertices);
  l.pp = env_limit("GSLAB_PP_LIMIT", l.pp);
  l.bp_cap = env_limit("GSLAB_BP_CAP", l.bp_cap);
  return l;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-state and stabilizer toolkit", "gslab"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Graph output format")->check(CLI::IsMember({"json", "dot", "text"}));

  std::string family;
  std::vector<std::size_t> params;
  std::string out_file;
  auto* gen = app.add_subcommand("gen", "Generate a named graph family");
  gen->add_option("family", family, "Family name")->required();
  gen->add_option("params", params, "Integer parameters")->required();
  gen->add_option("--out", out_file, "Write to a file instead of stdout");
  gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));

  std::string graph_path;
  std::string graph_path2;
  bool up_to_perm = false;
  auto* orbit = app.add_subcommand("lc-orbit", "Enumerate the LC orbit of a graph");
  orbit->add_option("graph", graph_path, "Graph JSON file")->required();
  orbit->add_flag("--up-to-perm", up_to_perm, "Deduplicate isomorphic members");

  auto* equiv = app.add_subcommand("lc-equiv", "Find an LC sequence between two graphs");
  equiv->add_option("source", graph_path, "Graph JSON file")->required();
  equiv->add_option("target", graph_path2, "Graph JSON file")->required();
  equiv->add_flag("--up-to-perm", up_to_perm, "Match the target up to relabeling");

  auto* msc = app.add_subcommand("msc", "Minimal Support Condition");
  msc->add_option("graph", graph_path, "Graph JSON file")->required();
  auto* dist = app.add_subcommand("distance", "Stabilizer distance");
  dist->add_option("graph", graph_path, "Graph JSON file")->required();
  auto* pp = app.add_subcommand("pp", "Pauli persistency");
  pp->add_option("graph", graph_path, "Graph JSON file")->required();

  std::string part;
  auto* schmidt = app.add_subcommand("schmidt-rank", "Schmidt rank across a cut");
  schmidt->add_option("graph", graph_path, "Graph JSON file")->required();
  schmidt->add_option("--part", part, "Comma-separated vertices of one side")->required();

  std::size_t m = 0;
  std::size_t n = 0;
  auto* css = app.add_subcommand("css-biclique", "CSS form and code distances of a biclique");
  css->add_option("m", m, "Left block size")->required();
  css->add_option("n", n, "Right block size")->required();

  std::string stab_path;
  auto* reduce = app.add_subcommand("reduce", "Reduce a stabilizer to an LC-equivalent graph");
  reduce->add_option("stabilizer", stab_path, "Stabilizer text file")->required();

  auto* ranks = app.add_subcommand("verify-rank-relations", "Rank and minus-sign relations of a bipartite graph");
  ranks->add_option("graph", graph_path, "Graph JSON file")->required();
  ranks->add_option("--part", part, "Comma-separated vertices of one side")->required();

  auto* certify = app.add_subcommand("certify", "Sufficient conditions for LU<=>LC");
  certify->add_option("graph", graph_path, "Graph JSON file")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Limits limits = limits_from_env();
    if (gen->parsed()) {
      const auto kind = parse_family_name(family);
      if (!kind) throw ParseError("unknown family '" + family + "'");
      const std::string text = format_graph(make_family({*kind, params}), format);
      if (out_file.empty()) {
        out << text;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw ParseError("cannot write " + out_file);
        f << text;
      }
    } else if (orbit->parsed()) {
      const auto o = lc_orbit(read_graph(graph_path), up_to_perm, limits);
      out << "size " << o.size() << "\n";
      for (std::size_t i = 0; i < o.size(); ++i) {
        out << steps_text(o.witnesses[i]);
        for (const auto& [u, v] : o.members[i].edges()) out << " " << u << "-" << v;
        out << "\n";
      }
    } else if (equiv->parsed()) {
      const Graph a = read_graph(graph_path);
      const Graph b = read_graph(graph_path2);
      if (up_to_perm) {
        const auto w = lc_equivalent_up_to_isomorphism(a, b, limits);
        if (!w) {
          out << "NOT-EQUIVALENT\n";
        } else {
          out << w->sequence.to_string() << "\n" << "permutation " << steps_text(w->permutation) << "\n";
        }
      } else {
        const auto w = lc_equivalent(a, b, limits);
        out << (w ? w->to_string() : std::string("NOT-EQUIVALENT")) << "\n";
      }
    } else if (msc->parsed()) {
      out << (check_msc(read_graph(graph_path), limits) ? "true" : "false") << "\n";
    } else if (dist->parsed()) {
      out << distance(graph_check_matrix(read_graph(graph_path)), limits) << "\n";
    } else if (pp->parsed()) {
      const auto res = pauli_persistency_search(read_graph(graph_path), limits);
      out << res.count << "\n";
      for (const auto& s : res.steps) out << basis_char(s.basis) << s.vertex << " ";
      out << "\n";
    } else if (schmidt->parsed()) {
      out << schmidt_rank(read_graph(graph_path), parse_part(part), limits) << "\n";
    } else if (css->parsed()) {
      out << to_stabilizer_text(biclique_css_form(m, n));
      const auto claim = css_claim_check(m, n, limits);
      auto show = [](const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : std::string("none"); };
      out << "H(C)\n" << to_parity_check_text(biclique_code(m, n));
      out << "H(C_dual)\n" << to_parity_check_text(biclique_dual_code(m, n));
      out << "distance " << show(claim.distance) << "\n";
      out << "dual_distance " << show(claim.dual_distance) << "\n";
      out << "branch " << (claim.dual_branch ? "dual" : "primal") << "\n";
      out << "claim " << (claim.holds ? "holds" : "fails") << "\n";
    } else if (reduce->parsed()) {
      const auto red = reduce_to_graph(parse_stabilizer_text(read_text(stab_path)), limits);
      out << format_graph(red.graph, format);
      out << "r " << red.trace.r << "\n" << "gates";
      for (const auto& g : red.local_gates) out << " " << gate_name(g.gate) << "@" << g.qubit;
      out << "\n";
    } else if (ranks->parsed()) {
      const auto rep = verify_rank_relations(read_graph(graph_path), parse_part(part), limits);
      auto yes = [](bool b) { return b ? "holds" : "fails"; };
      out << "n " << rep.n << "\nr " << rep.r << "\nw " << rep.w << "\n|S_R| " << rep.support_subgroup_order
          << "\nschmidt_rank " << rep.schmidt_rank << "\nrank_xor " << rep.rank_xor << "\nrank_rational "
          << rep.rank_rational << "\nbp " << (rep.bp ? std::to_string(*rep.bp) : std::string("none"))
          << "\nminus_sign_relation " << yes(rep.minus_sign_relation) << "\nsubgroup_relation "
          << yes(rep.subgroup_relation) << "\nbp_bounds " << yes(rep.bp_bounds) << "\nrank_chain "
          << yes(rep.rank_chain) << "\nrank_rational_equals_bp " << (rep.rational_equals_bp ? "yes" : "no") << "\n";
    } else if (certify->parsed()) {
      const auto cert = lulc_certificate(read_graph(graph_path), limits);
      if (cert.result) {
        out << "RESULT " << *cert.result << "\n";
        if (cert.witness) out << "witness " << cert.witness->to_string() << "\n";
      } else {
        out << "UNKNOWN\n";
      }
      for (const auto& s : cert.skipped) out << "skipped " << s << "\n";
    } else if (verify->parsed()) {
      bool all = true;
      for (const auto& c : acceptance::criteria(limits)) {
        const auto start = std::chrono::steady_clock::now();
        acceptance::CriterionResult r;
        try {
          r = c.run();
        } catch (const std::exception& e) {
          r = {c.id, c.key, false, std::string("exception: ") + e.what(), 0.0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << acceptance::format_line(r) << std::endl;
        all = all && r.passed;
      }
      out << (all ? "ALL PASS" : "SOME FAILED") << "\n";
      return all ? kOk : kFailed;
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParam& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kUsage;
  } catch (const VertexOutOfRange& e) {
    err << "vertex out of range: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidPartition& e) {
    err << "invalid partition: " << e.what() << "\n";
    return kUsage;
  } catch (const DisconnectedGraph& e) {
    err << "disconnected graph: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedCheckMatrix& e) {
    err << "malformed check matrix: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace gslab::cli
