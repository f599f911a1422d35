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
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gslab/gslab.hpp"

using namespace gslab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gslab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("gslab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string graph_file(const std::string& name, const Graph& g) { return write(name, graph_to_json(g)); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, GenRoundTripsThroughJson) {
  const auto res = run_cli({"gen", "biclique", "3", "3"});
  ASSERT_EQ(res.code, 0);
  EXPECT_EQ(graph_from_json(res.out), biclique(3, 3));
  const auto path = (dir_ / "k.json").string();
  EXPECT_EQ(run_cli({"gen", "star", "5", "--out", path}).code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(graph_from_json(text.str()), star_graph(5));
  const auto dot = run_cli({"gen", "path", "3", "--format", "dot"});
  EXPECT_NE(dot.out.find("0 -- 1;"), std::string::npos);
}

TEST_F(CliTest, LcEquivalence) {
  const auto star = graph_file("s.json", star_graph(4));
  const auto complete = graph_file("k.json", complete_graph(4));
  const auto path = graph_file("p.json", path_graph(4));
  auto res = run_cli({"lc-equiv", star, complete});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "[0]\n");
  res = run_cli({"lc-equiv", star, path});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "NOT-EQUIVALENT\n");
  res = run_cli({"lc-equiv", graph_file("b.json", biclique(3, 3)), graph_file("t.json", binary_star(6)), "--up-to-perm"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out.substr(0, res.out.find('\n')), "[0,3,0]");
}

TEST_F(CliTest, OrbitAndScalarQueries) {
  const auto k33 = graph_file("k33.json", biclique(3, 3));
  EXPECT_EQ(run_cli({"lc-orbit", k33, "--up-to-perm"}).out.substr(0, 7), "size 4\n");
  EXPECT_EQ(run_cli({"msc", k33}).out, "false\n");
  EXPECT_EQ(run_cli({"msc", graph_file("c5.json", cycle_graph(5))}).out, "true\n");
  EXPECT_EQ(run_cli({"distance", k33}).out, "2\n");
  EXPECT_EQ(run_cli({"pp", k33}).out.substr(0, 2), "2\n");
  EXPECT_EQ(run_cli({"schmidt-rank", k33, "--part", "0,1,2"}).out, "1\n");
}

TEST_F(CliTest, CssReduceAndRankRelations) {
  const auto css = run_cli({"css-biclique", "3", "2"});
  EXPECT_EQ(css.code, 0);
  EXPECT_NE(css.out.find("claim holds"), std::string::npos);
  const auto red = run_cli({"reduce", write("ghz.txt", "+XXX\n+ZZI\n+IZZ\n")});
  ASSERT_EQ(red.code, 0);
  EXPECT_TRUE(isomorphic(graph_from_json(red.out.substr(0, red.out.find('\n') + 1)), star_graph(3)));
  const auto ranks = run_cli({"verify-rank-relations", graph_file("k.json", biclique(3, 3)), "--part", "0,1,2"});
  EXPECT_EQ(ranks.code, 0);
  EXPECT_NE(ranks.out.find("w 16"), std::string::npos);
}

TEST_F(CliTest, Certificates) {
  EXPECT_EQ(run_cli({"certify", graph_file("s.json", star_graph(5))}).out, "RESULT 1\n");
  const auto big = run_cli({"certify", graph_file("b.json", biclique(5, 5))});
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("RESULT 5"), std::string::npos);
  EXPECT_NE(big.out.find("witness [0,5,0]"), std::string::npos);
  const auto unknown = run_cli({"certify", graph_file("r.json", repeater_complete(10))});
  EXPECT_EQ(unknown.code, 0);
  EXPECT_EQ(unknown.out.substr(0, 8), "UNKNOWN\n");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gen", "bogus", "3"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"gen", "star", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"msc", (dir_ / "missing.json").string()}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"msc", write("bad.json", "{\"format\":\"graphstate/1\",\"n\":2,\"edges\":[[0,0]]}")}).code,
            cli::kUsage);
  const auto k33 = graph_file("k33.json", biclique(3, 3));
  EXPECT_EQ(run_cli({"schmidt-rank", k33, "--part", "0,9"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify-rank-relations", k33, "--part", "0,3"}).code, cli::kUsage);
  const auto two = graph_file("two.json", Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(run_cli({"msc", two}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"distance", graph_file("p.json", path_graph(20))}).code, cli::kResource);
}

TEST(CliLimits, EnvironmentOverrides) {
  ::setenv("GSLAB_PP_LIMIT", "4", 1);
  ::setenv("GSLAB_ENUM_LIMIT", "9", 1);
  const auto limits = cli::limits_from_env();
  EXPECT_EQ(limits.pp, 4u);
  EXPECT_EQ(limits.enumeration, 9u);
  ::unsetenv("GSLAB_PP_LIMIT");
  ::unsetenv("GSLAB_ENUM_LIMIT");
  EXPECT_EQ(cli::limits_from_env().pp, Limits{}.pp);
}
