// Copyright 2026 The lgk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lgk/edge_list_io.h"
#include "lgk/errors.h"
#include "lgk/exact_solver.h"
#include "lgk/instance_gen.h"
#include "lgk/kernelizer.h"

namespace lgk {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

CliResult lgk_run(std::vector<std::string> args) {
  args.insert(args.begin(), "lgk");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lgk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  std::string graph_file(const std::string& name, const Graph& g) {
    return file(name, format_edge_list(g));
  }

  fs::path dir_;
};

const char* kClaw = "4 3\n0 1\n0 2\n0 3\n";
const char* kTwoClaws = "8 6\n0 1\n0 2\n0 3\n4 5\n4 6\n4 7\n";

std::vector<std::vector<std::string>> read_csv(const std::string& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST_F(CliTest, RecognizeClaw) {
  CliResult r = lgk_run({"recognize", "--input", file("claw.txt", kClaw)});
  EXPECT_EQ(r.code, 0);
  json rep = r.report();
  EXPECT_EQ(rep["subcommand"], "recognize");
  EXPECT_EQ(rep["result"]["verdict"], "not-line");
  EXPECT_EQ(rep["result"]["forbidden"], json({0, 1, 2, 3}));
  EXPECT_EQ(rep["result"]["pattern"], 1);
  EXPECT_TRUE(rep["timings_ms"].contains("recognize"));
  EXPECT_NE(r.err.find("not a line graph"), std::string::npos);
}

TEST_F(CliTest, RecognizeLineGraphEmitsWitnessAndRoot) {
  // L(P4) = P3.
  const std::string w = path("w.json");
  const std::string root = path("root.txt");
  CliResult r = lgk_run({"recognize", "--input", file("p3.txt", "3 2\n0 1\n1 2\n"), "--emit-witness", w,
                   "--emit-root", root});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["result"]["verdict"], "line");
  std::ifstream in(w);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CliquePartitionWitness witness = witness_from_json(text);
  Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(validate_witness(p3, witness));
  Graph h = load_edge_list(root);
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_EQ(h.num_edges(), 3u);
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  CliResult r = lgk_run({"recognize", "--input", file("bad.txt", "three 2\n0 1\n1 2\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_EQ(lgk_run({"recognize", "--input", path("missing.txt")}).code, 2);
  EXPECT_EQ(lgk_run({"recognize"}).code, 2);
  EXPECT_EQ(lgk_run({"frobnicate"}).code, 2);
  EXPECT_EQ(lgk_run({"solve", "--input", file("c.txt", kClaw), "--k", "1", "--oracle", "psychic"}).code, 2);
  EXPECT_EQ(lgk_run({"--help"}).code, 0);
}

TEST_F(CliTest, KernelizeVerdicts) {
  Graph line = line_graph_of(random_root(8, 0.4, 2)).graph;
  CliResult yes = lgk_run({"kernelize", "--input", graph_file("line.txt", line), "--k", "0"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.report()["result"]["verdict"], "yes");
  CliResult no = lgk_run({"kernelize", "--input", file("claws.txt", kTwoClaws), "--k", "1"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.report()["result"]["verdict"], "no");
}

TEST_F(CliTest, KernelizeMaterializesConstantInstances) {
  const std::string out = path("k.txt");
  lgk_run({"kernelize", "--input", file("claws.txt", kTwoClaws), "--k", "1", "--out", out,
           "--materialize"});
  EXPECT_EQ(load_edge_list(out), Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_TRUE(fs::exists(out + ".json"));
  const std::string no_out = path("none.txt");
  lgk_run({"kernelize", "--input", file("claws2.txt", kTwoClaws), "--k", "1", "--out", no_out});
  EXPECT_FALSE(fs::exists(no_out));
}

TEST_F(CliTest, KernelizePlantedWithinBoundAndReparses) {
  auto [g, r] = planted_instance(GenSpec{30, 0.2, 2, 9});
  const std::string out = path("kernel.txt");
  CliResult run = lgk_run({"kernelize", "--input", graph_file("g.txt", g), "--k", "2", "--out", out});
  ASSERT_EQ(run.code, 0);
  json stats = run.report()["result"];
  ASSERT_EQ(stats["verdict"], "reduced");
  EXPECT_LE(stats["kernel_n"].get<std::uint64_t>(), stats["bound"].get<std::uint64_t>());
  EXPECT_EQ(stats["bound"], kernel_vertex_bound(2));
  Graph kernel = load_edge_list(out);
  EXPECT_EQ(kernel.num_vertices(), stats["kernel_n"].get<std::size_t>());
  std::ifstream side(out + ".json");
  EXPECT_EQ(json::parse(side)["kernel_m"], stats["kernel_m"]);
}

TEST_F(CliTest, KernelAgreesWithOriginalUnderSolve) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto [g, r] = planted_instance(GenSpec{6, 0.5, 1 + seed % 3, seed});
    if (g.num_edges() > kBruteforceMaxEdges) continue;
    const std::string in = graph_file("g" + std::to_string(seed) + ".txt", g);
    const std::string out = path("k" + std::to_string(seed) + ".txt");
    for (std::size_t k = 0; k <= 2; ++k) {
      CliResult kr = lgk_run({"kernelize", "--input", in, "--k", std::to_string(k), "--out", out,
                        "--materialize"});
      ASSERT_EQ(kr.code, 0);
      const std::size_t out_k = kr.report()["result"]["out_k"];
      CliResult a = lgk_run({"solve", "--input", in, "--k", std::to_string(k), "--oracle", "brute"});
      CliResult b = lgk_run({"solve", "--input", out, "--k", std::to_string(out_k), "--oracle", "brute"});
      EXPECT_EQ(a.code, b.code) << "seed " << seed << " k " << k;
    }
  }
}

TEST_F(CliTest, SolveClaw) {
  const std::string claw = file("claw.txt", kClaw);
  CliResult yes = lgk_run({"solve", "--input", claw, "--k", "1"});
  EXPECT_EQ(yes.code, 0);
  json rep = yes.report();
  EXPECT_EQ(rep["result"]["verdict"], "yes");
  EXPECT_EQ(rep["result"]["deleted"].size(), 1u);
  EXPECT_TRUE(rep["result"]["certificate"].contains("cliques"));
  CliResult no = lgk_run({"solve", "--input", claw, "--k", "0"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.report()["result"]["verdict"], "no");
  EXPECT_EQ(lgk_run({"solve", "--input", claw, "--k", "1", "--oracle", "brute"}).code, 0);
}

TEST_F(CliTest, SolvePlantedTwo) {
  auto [g, r] = planted_instance(GenSpec{5, 0.5, 2, 4});
  ASSERT_EQ(r, 2u);
  const std::string in = graph_file("g.txt", g);
  EXPECT_EQ(lgk_run({"solve", "--input", in, "--k", "2"}).code, 0);
  EXPECT_EQ(lgk_run({"solve", "--input", in, "--k", "2", "--oracle", "brute"}).code, 0);
}

TEST_F(CliTest, SolveResourceGuardExitsTwo) {
  auto [g, r] = planted_instance(GenSpec{12, 0.6, 1, 1});
  ASSERT_GT(g.num_edges(), kBruteforceMaxEdges);
  CliResult run = lgk_run({"solve", "--input", graph_file("big.txt", g), "--k", "1", "--oracle", "brute"});
  EXPECT_EQ(run.code, 2);
}

TEST_F(CliTest, GenWritesGraphAndSidecar) {
  const std::string out = path("gen.txt");
  CliResult run = lgk_run({"gen", "--n", "10", "--p", "0.3", "--r", "2", "--seed", "77", "--out", out});
  ASSERT_EQ(run.code, 0);
  EXPECT_EQ(load_edge_list(out), planted_instance(GenSpec{10, 0.3, 2, 77}).first);
  std::ifstream side(out + ".json");
  std::string text((std::istreambuf_iterator<char>(side)), std::istreambuf_iterator<char>());
  EXPECT_EQ(gen_spec_from_json(text), (GenSpec{10, 0.3, 2, 77}));
  EXPECT_EQ(json::parse(text)["kind"], "planted");

  lgk_run({"gen", "--kind", "chain", "--levels", "3", "--k", "1", "--seed", "5", "--out", out});
  EXPECT_EQ(load_edge_list(out), chain_instance(3, 1, 5));
  lgk_run({"gen", "--kind", "root", "--n", "7", "--p", "0.5", "--seed", "5", "--out", out});
  EXPECT_EQ(load_edge_list(out), random_root(7, 0.5, 5));
  EXPECT_EQ(lgk_run({"gen", "--n", "3", "--p", "0.1", "--r", "50", "--seed", "1", "--out", out}).code, 2);
}

TEST_F(CliTest, BenchSweepRespectsBoundAndIsReproducible) {
  const std::string a = path("a.csv");
  const std::string b = path("b.csv");
  const char* suite = "n=25;p=0.2;r=1:3;k=1:5";
  ASSERT_EQ(lgk_run({"bench", "--suite", suite, "--seed", "3", "--csv", a}).code, 0);
  ASSERT_EQ(lgk_run({"bench", "--suite", suite, "--seed", "3", "--csv", b}).code, 0);
  auto rows_a = read_csv(a);
  auto rows_b = read_csv(b);
  ASSERT_EQ(rows_a.size(), 16u);
  const auto& header = rows_a[0];
  auto col = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    EXPECT_NE(it, header.end()) << name;
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t kernel_n = col("kernel_n");
  const std::size_t bound = col("bound");
  EXPECT_EQ(bound, kernel_n + 1);  // emitted next to each other
  col("levels");
  col("s_size");
  col("kernel_m");
  for (std::size_t i = 1; i < rows_a.size(); ++i) {
    ASSERT_EQ(rows_a[i].size(), header.size());
    EXPECT_LE(std::stoull(rows_a[i][kernel_n]), std::stoull(rows_a[i][bound]));
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c].size() > 3 && header[c].substr(header[c].size() - 3) == "_ms") continue;
      EXPECT_EQ(rows_a[i][c], rows_b[i][c]) << header[c];
    }
  }
}

TEST_F(CliTest, EmptySweepWritesHeaderOnly) {
  const std::string csv = path("e.csv");
  ASSERT_EQ(lgk_run({"bench", "--suite", "k=5:1", "--seed", "1", "--csv", csv}).code, 0);
  auto rows = read_csv(csv);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0][0], "index");
}

TEST(ParseSweep, ValuesRangesAndLists) {
  cli::SweepSpec s = cli::parse_sweep("n=10:30:10; p=0.1,0.3 ;r=2;k=1:3");
  EXPECT_EQ(s.n, (std::vector<std::size_t>{10, 20, 30}));
  EXPECT_EQ(s.p, (std::vector<double>{0.1, 0.3}));
  EXPECT_EQ(s.r, (std::vector<std::size_t>{2}));
  EXPECT_EQ(s.k, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(s.size(), 18u);
  EXPECT_EQ(cli::parse_sweep("p=0.1:0.3:0.1").p.size(), 3u);
  EXPECT_EQ(cli::parse_sweep("").size(), 1u);
  EXPECT_EQ(cli::parse_sweep("k=3:1").size(), 0u);
  EXPECT_THROW(cli::parse_sweep("q=1"), MalformedInput);
  EXPECT_THROW(cli::parse_sweep("n=1:"), MalformedInput);
  EXPECT_THROW(cli::parse_sweep("n"), MalformedInput);
  EXPECT_THROW(cli::parse_sweep("n=1:5:0"), MalformedInput);
}

TEST(BenchThreads, EnvironmentCap) {
  setenv("LGK_THREADS", "3", 1);
  EXPECT_EQ(cli::bench_threads(100), 3u);
  EXPECT_EQ(cli::bench_threads(2), 2u);
  EXPECT_EQ(cli::bench_threads(0), 1u);
  setenv("LGK_THREADS", "junk", 1);
  EXPECT_GE(cli::bench_threads(100), 1u);
  unsetenv("LGK_THREADS");
}

}  // namespace
}  // namespace lgk
