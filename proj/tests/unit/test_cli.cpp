// Copyright 2026 The gqtsp Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "gqtsp/tsp/graph_io.hpp"
#include "json.hpp"

namespace gqtsp::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("gqtsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run_args(std::vector<std::string> args) {
    args.insert(args.begin(), "gqtsp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    auto* o = std::cout.rdbuf(out.rdbuf());
    auto* e = std::cerr.rdbuf(err.rdbuf());
    const int code = run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(o);
    std::cerr.rdbuf(e);
    stdout_ = out.str();
    return code;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::string stdout_;
};

TEST_F(Cli, GenFourCitiesDegreeThreeIsComplete) {
  ASSERT_EQ(run_args({"gen", "-N", "4", "-d", "3", "--seed", "1", "-o", path("g.json")}), kOk);
  const tsp::TspGraph g = tsp::read_graph_file(path("g.json"));
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_NE(stdout_.find("optimum"), std::string::npos);
}

TEST_F(Cli, GenRespectsTheDegreeBound) {
  ASSERT_EQ(run_args({"gen", "-N", "6", "-d", "4", "--seed", "2", "-o", path("g.json")}), kOk);
  const tsp::TspGraph g = tsp::read_graph_file(path("g.json"));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_LE(g.degree(i), 4u);
}

TEST_F(Cli, GenIsByteIdenticalForASeed) {
  ASSERT_EQ(run_args({"gen", "-N", "5", "-d", "4", "--seed", "9", "-o", path("a.json")}), kOk);
  ASSERT_EQ(run_args({"gen", "-N", "5", "-d", "4", "--seed", "9", "-o", path("b.json")}), kOk);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(Cli, UnknownFlagIsAUsageError) {
  EXPECT_EQ(run_args({"qubits", "--no-such-flag"}), kUsage);
  EXPECT_EQ(run_args({}), kUsage);
}

TEST_F(Cli, UnknownSuiteIsAUsageError) { EXPECT_EQ(run_args({"verify", "tsp"}), kUsage); }

TEST_F(Cli, MalformedGraphIsAnInputError) {
  std::ofstream(path("bad.json")) << "{\"format\": \"gqtsp-graph\"";
  EXPECT_EQ(run_args({"solve", path("bad.json")}), kInputError);
}

TEST_F(Cli, CycleFreeGraphExitsWithNoValidCycle) {
  // two triangles sharing city 0
  std::ofstream(path("bowtie.json"))
      << R"({"format": "gqtsp-graph", "version": 1, "N": 5, "d": 4,
             "edges": [[0,1,1],[1,2,1],[0,2,1],[0,3,1],[3,4,1],[0,4,1]]})";
  EXPECT_EQ(run_args({"solve", path("bowtie.json")}), kNoValidCycle);
}

TEST_F(Cli, LargeSolveNeedsTheOverride) {
  ASSERT_EQ(run_args({"gen", "-N", "6", "-d", "4", "-o", path("g6.json")}), kOk);
  EXPECT_EQ(run_args({"solve", path("g6.json")}), kResource);
  EXPECT_EQ(run_args({"sweep", path("g6.json")}), kResource);
}

TEST_F(Cli, SolveFindsTheOptimumAtFourCities) {
  ASSERT_EQ(run_args({"gen", "-N", "4", "-d", "3", "--seed", "1", "-o", path("g.json")}), kOk);
  ASSERT_EQ(run_args({"solve", path("g.json"), "--shots", "128", "--rounds", "3",
                      "--initial-samples", "1", "--seed", "4", "-o", path("r.json")}),
            kOk);
  const json r = json::parse(slurp(path("r.json")));
  EXPECT_TRUE(r["optimal"].get<bool>());
  EXPECT_EQ(r["best"]["cost"], r["optimum"]["cost"]);
  EXPECT_EQ(r["qubit_budget"]["total"], 23);
  EXPECT_FALSE(r["rounds"].empty());
}

TEST_F(Cli, SweepStartsUniform) {
  ASSERT_EQ(run_args({"gen", "-N", "4", "-d", "3", "--seed", "1", "-o", path("g.json")}), kOk);
  ASSERT_EQ(run_args({"sweep", path("g.json"), "--max-iters", "0", "-o", path("s.csv")}), kOk);
  // each undirected tour has two encodings among 2^8 words
  EXPECT_EQ(slurp(path("s.csv")), "iteration,p1,p2,p3\n0,0.0078125000,0.0078125000,0.0078125000\n");
}

TEST_F(Cli, VerifyMcxPasses) {
  ASSERT_EQ(run_args({"verify", "mcx", "--min-n", "4", "--max-n", "6", "-o", path("v.json")}), kOk);
  const json v = json::parse(slurp(path("v.json")));
  EXPECT_TRUE(v["pass"].get<bool>());
  EXPECT_GT(v["checked"].get<std::size_t>(), 0u);
}

TEST_F(Cli, QubitReportRows) {
  ASSERT_EQ(run_args({"qubits", "--min-n", "4", "--max-n", "8", "--format", "json", "-o",
                      path("q.json")}),
            kOk);
  const json q = json::parse(slurp(path("q.json")));
  ASSERT_EQ(q["rows"].size(), 5u);
  EXPECT_EQ(q["rows"][0]["sparse_total"], 23);
  EXPECT_EQ(q["rows"][2]["decomposition"], "12+12+3+2+2=31");
  EXPECT_EQ(q["rows"][4]["dense_total"], 45);
}

TEST_F(Cli, ManifestListsItsOutput) {
  ASSERT_EQ(run_args({"qubits", "-o", path("q.txt"), "--manifest", path("m.json")}), kOk);
  const json m = json::parse(slurp(path("m.json")));
  EXPECT_EQ(m["command"], "qubits");
  ASSERT_EQ(m["outputs"].size(), 1u);
  EXPECT_EQ(m["outputs"][0], path("q.txt"));
  EXPECT_FALSE(m.contains("timings"));
}

}  // namespace
}  // namespace gqtsp::cli
