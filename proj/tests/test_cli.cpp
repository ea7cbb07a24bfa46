// Copyright 2026 The spinbench developers
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinbench/chimera.hpp"
#include "spinbench/graph.hpp"

using namespace spinbench;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "spinbench_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& dir) {
    const std::string cmd = std::string(SPINBENCH_CLI) + " " + args + " > " +
                            (dir / "stdout.txt").string() + " 2> " + (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
}  // namespace

TEST_CASE("cli gen and solve agree across solvers") {
    TempDir tmp;
    const auto inst = (tmp.path / "i.json").string();
    REQUIRE(run("gen --family ising --k 2 --seed 7 --out " + inst, tmp.path) == 0);
    CHECK(fs::exists(inst + ".run.json"));

    REQUIRE(run("solve --solver dp --in " + inst + " --seed 1 --out " + (tmp.path / "dp.json").string(),
                tmp.path) == 0);
    const auto dp = nlohmann::json::parse(slurp(tmp.path / "dp.json"));

    REQUIRE(run("solve --solver sa --in " + inst + " --seed 1 --out " + (tmp.path / "sa.json").string(),
                tmp.path) == 0);
    const auto sa = nlohmann::json::parse(slurp(tmp.path / "sa.json"));

    CHECK(dp["optimality_proven"].get<bool>());
    CHECK(sa["energy"].get<double>() >= dp["energy"].get<double>());

    // a single cell fits the exhaustive oracle; the two exact engines must agree
    const auto small = (tmp.path / "small.json").string();
    REQUIRE(run("gen --family mais --k 1 --seed 9 --out " + small, tmp.path) == 0);
    REQUIRE(run("solve --solver brute --in " + small + " --seed 1 --out " +
                    (tmp.path / "brute.json").string(),
                tmp.path) == 0);
    REQUIRE(run("solve --solver dp --in " + small + " --seed 1 --out " +
                    (tmp.path / "dp_small.json").string(),
                tmp.path) == 0);
    CHECK(nlohmann::json::parse(slurp(tmp.path / "brute.json"))["energy"] ==
          nlohmann::json::parse(slurp(tmp.path / "dp_small.json"))["energy"]);
}

TEST_CASE("cli exit codes") {
    TempDir tmp;
    CHECK(run("bench --config missing.json --out " + (tmp.path / "out").string(), tmp.path) == 1);
    CHECK(run("--version", tmp.path) == 0);
    CHECK(run("frobnicate", tmp.path) == 1);
    CHECK(run("gen --family nope --out x.json", tmp.path) == 1);
    // runtime failure: dp on a non-chimera instance header
    const auto bad = tmp.path / "bad.json";
    std::ofstream(bad) << R"({"family":"x","n":2,"offset":0,"h":[0,0],"J":[[0,1,1.0]]})";
    CHECK(run("solve --solver dp --in " + bad.string() + " --seed 1", tmp.path) == 2);
}

TEST_CASE("cli metrics reports the triangle-free topology") {
    TempDir tmp;
    const auto edges = (tmp.path / "chimera_k4.edges").string();
    write_edge_list_file(edges, build_chimera({4, 4, {}}));
    REQUIRE(run("metrics --in " + edges, tmp.path) == 0);
    const std::string out = slurp(tmp.path / "stdout.txt");
    CHECK(out.find("clustering 0\n") != std::string::npos);
    CHECK(out.find("n 128") != std::string::npos);
}

TEST_CASE("cli bench produces a deterministic campaign") {
    TempDir tmp;
    const auto config = tmp.path / "campaign.json";
    std::ofstream(config) << R"({
      "family": "ising", "sizes": [1], "instances": 2,
      "solvers": [{"id": "sa", "params": {"restarts": 10, "sweeps": 50}}],
      "trials": 2, "gauges": 2, "criterion": "optimal", "seed": 99, "t_trial_us": 20.0
    })";
    REQUIRE(run("bench --config " + config.string() + " --out " + (tmp.path / "run1").string() +
                    " --jobs 1",
                tmp.path) == 0);
    REQUIRE(run("bench --config " + config.string() + " --out " + (tmp.path / "run2").string() +
                    " --jobs 3",
                tmp.path) == 0);
    CHECK(slurp(tmp.path / "run1" / "records.csv") == slurp(tmp.path / "run2" / "records.csv"));
    CHECK(fs::exists(tmp.path / "run1" / "scaling_sa.tsv"));
}

TEST_CASE("cli ingest builds the mutual-mention graph") {
    TempDir tmp;
    const auto records = tmp.path / "records.jsonl";
    std::ofstream(records) << R"({"t":"2014-02-01T00:00:00Z","from":"a","refs":["b"]})"
                           << "\n"
                           << R"({"t":"2014-02-02T00:00:00Z","from":"b","refs":["a"]})"
                           << "\n"
                           << "garbage line\n";
    REQUIRE(run("ingest --kind mention --from 2014-01-01 --to 2014-12-31 --in " +
                    records.string() + " --out " + (tmp.path / "g.edges").string(),
                tmp.path) == 0);
    const Graph g = read_edge_list_file((tmp.path / "g.edges").string());
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(fs::exists(tmp.path / "g.edges.ids"));
    CHECK(slurp(tmp.path / "stdout.txt").find("skipped 1") != std::string::npos);
}

TEST_CASE("cli community greedy") {
    TempDir tmp;
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(2, 3);
    const auto edges = (tmp.path / "g.edges").string();
    write_edge_list_file(edges, g);
    REQUIRE(run("community --in " + edges + " --solver greedy --seed 3 --out " +
                    (tmp.path / "p.txt").string(),
                tmp.path) == 0);
    CHECK(slurp(tmp.path / "stdout.txt").find("communities 2") != std::string::npos);
    CHECK(fs::exists(tmp.path / "p.txt"));
}
