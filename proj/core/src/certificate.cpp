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
#include <algorithm>
#include <string>

#include "gslab/errors.hpp"
#include "gslab/gf2.hpp"
#include "gslab/lc.hpp"
#include "gslab/stabilizer.hpp"

namespace gslab {

namespace {

constexpr std::size_t kSmallGraph = 8;
constexpr std::size_t kSupportRankBound = 6;

// Runs check_msc and reports whether it could be evaluated.
std::optional<bool> msc_if_possible(const Graph& g, const Limits& limits, std::vector<std::string>& skipped,
                                    int result) {
  const std::string tag = "result " + std::to_string(result) + ": ";
  if (g.order() == 0) {
    skipped.push_back(tag + "empty graph");
    return std::nullopt;
  }
  if (!is_connected(g)) {
    skipped.push_back(tag + "graph is not connected");
    return std::nullopt;
  }
  if (g.order() > limits.enumeration) {
    skipped.push_back(tag + "stabilizer enumeration limit exceeded");
    return std::nullopt;
  }
  return check_msc(g, limits);
}

}  // namespace

std::string Certificate::verdict() const {
  return result ? "HOLDS by result " + std::to_string(*result) : std::string("UNKNOWN");
}

Certificate lulc_certificate(const Graph& g, const Limits& limits) {
  Certificate cert;
  const std::size_t n = g.order();
  if (n <= kSmallGraph) {
    cert.result = 1;
    return cert;
  }

  auto walk = walk_orbit(g, limits.certificate_budget, [](const Graph& x) { return !has_short_cycle(x); });
  const auto& members = walk.visited.members;
  auto witness_to = [&](std::size_t i) { return LCSequence(g, walk.visited.witnesses[i], members[i]); };
  if (walk.hit) {
    cert.result = 5;
    cert.witness = witness_to(*walk.hit);
    return cert;
  }
  if (!walk.complete) {
    cert.skipped.push_back("results 2, 5, 6: orbit walk stopped after " + std::to_string(members.size()) +
                           " graphs");
  }

  if (auto msc = msc_if_possible(g, limits, cert.skipped, 3); msc && *msc) {
    cert.result = 3;
    return cert;
  }
  if (auto msc = msc_if_possible(remove_leaves(g), limits, cert.skipped, 4); msc && *msc) {
    cert.result = 4;
    return cert;
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    if (star_center(members[i])) {
      cert.result = 2;
      cert.witness = witness_to(i);
      return cert;
    }
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    if (std::min(n, rank_xor(members[i].adjacency())) < kSupportRankBound) {
      cert.result = 6;
      cert.witness = witness_to(i);
      return cert;
    }
  }
  return cert;
}

}  // namespace gslab
