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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinbench/bench.hpp"
#include "spinbench/chimera.hpp"
#include "spinbench/community.hpp"
#include "spinbench/generators.hpp"
#include "spinbench/graph.hpp"
#include "spinbench/ingest.hpp"
#include "spinbench/instance_io.hpp"
#include "spinbench/rng.hpp"
#include "spinbench/solvers.hpp"
#include "spinbench/synthnet.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace spinbench;

namespace {

constexpr const char* kVersion = "spinbench 0.1.0 (instance-json v1, edge-list v1, campaign-csv v1)";

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t drawn = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cout << "seed " << drawn << "\n";
    return drawn;
}

void record_run_config(const std::string& out_path, const json& resolved) {
    std::ofstream out(out_path + ".run.json");
    out << resolved.dump(2) << "\n";
}

int require_file(const std::string& path) {
    if (!fs::exists(path)) {
        std::cerr << "error: no such file: " << path << "\n";
        return 1;
    }
    return 0;
}

struct GenArgs {
    std::string family;
    NodeId k = 2;
    NodeId n = 100;
    double p = 0.05;
    double cycle_density = 0.2;
    std::string loop_policy = "any";
    MinorGenParams minor;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int cmd_gen(const GenArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);
    json resolved{{"subcommand", "gen"}, {"family", args.family}, {"seed", seed},
                  {"out", args.out}};

    if (args.family == "er") {
        const Graph g = gen_erdos_renyi(args.n, args.p, seed);
        write_edge_list_file(args.out, g);
        resolved["n"] = args.n;
        resolved["p"] = args.p;
        std::cout << "er graph: " << g.node_count() << " nodes, " << g.edge_count()
                  << " edges (largest component)\n";
    } else if (args.family == "minor") {
        const ChimeraSpec spec{args.k, args.k, {}};
        MinorGenParams params = args.minor;
        params.seed = seed;
        const ChimeraMinor minor = generate_chimera_minor(spec, params);
        write_edge_list_file(args.out, minor.graph);
        write_chain_file(args.out + ".chains", minor.embedding);
        resolved["k"] = args.k;
        resolved["p1"] = params.p1;
        resolved["p2"] = params.p2;
        resolved["p2_iters"] = params.p2_iters;
        resolved["p3"] = params.p3;
        std::cout << "chimera minor: " << minor.graph.node_count() << " nodes, "
                  << minor.graph.edge_count() << " edges, utilization "
                  << utilization(minor.embedding, spec) << "\n";
    } else {
        const ChimeraSpec spec{args.k, args.k, {}};
        resolved["k"] = args.k;
        if (args.family == "planted") {
            IsingInstance inst =
                gen_planted(spec, args.cycle_density, loop_policy_from_string(args.loop_policy), seed);
            save_ising_file(args.out, inst);
            resolved["cycle_density"] = args.cycle_density;
            resolved["loop_policy"] = args.loop_policy;
            std::cout << "planted instance: n=" << inst.n << ", couplers=" << inst.couplers.size()
                      << ", planted energy " << *inst.planted_energy << "\n";
        } else if (args.family == "qubo") {
            const Graph topo = build_chimera(spec);
            QuboInstance q = gen_random_qubo(topo, seed);
            q.topology_header = spec.to_header();
            save_qubo_file(args.out, q);
            std::cout << "qubo instance: n=" << q.n << ", terms=" << q.b.size() << "\n";
        } else {
            const Graph topo = build_chimera(spec);
            IsingInstance inst;
            if (args.family == "ising")
                inst = gen_random_ising(topo, seed);
            else if (args.family == "mis")
                inst = gen_mis(topo, seed);
            else if (args.family == "mais")
                inst = gen_mais(topo, seed);
            else
                throw CLI::ValidationError("--family", "unknown family " + args.family);
            inst.topology_header = spec.to_header();
            save_ising_file(args.out, inst);
            std::cout << args.family << " instance: n=" << inst.n
                      << ", couplers=" << inst.couplers.size() << "\n";
            if (!fits_coupler_grid(inst))
                std::cout << "note: coefficients exceed the 1/8-step hardware grid after "
                             "rescaling (informational; solvers here are full precision)\n";
        }
    }
    record_run_config(args.out, resolved);
    return 0;
}

struct SolveArgs {
    std::string solver;
    std::string in;
    std::string params_path;
    std::string out;
    std::optional<std::uint64_t> seed;
};

int cmd_solve(const SolveArgs& args) {
    if (int rc = require_file(args.in)) return rc;
    json params = json::object();
    if (!args.params_path.empty()) {
        if (int rc = require_file(args.params_path)) return rc;
        std::ifstream in(args.params_path);
        in >> params;
    }
    const std::uint64_t seed = resolve_seed(args.seed);
    const IsingInstance inst = load_ising_or_qubo_file(args.in);
    const SolveResult res = run_named_solver({args.solver, params}, inst, seed);

    std::cout << "solver " << args.solver << ": energy " << format_double(res.best_energy)
              << (res.optimality_proven ? " (optimal)" : "") << ", steps " << res.steps;
    if (res.degeneracy > 0) std::cout << ", degeneracy " << res.degeneracy;
    std::cout << "\n";

    if (!args.out.empty()) {
        json config = json::array();
        for (std::int8_t s : res.best_config.s) config.push_back(static_cast<int>(s));
        json out{{"solver", args.solver},      {"energy", res.best_energy},
                 {"config", config},           {"steps", res.steps},
                 {"optimality_proven", res.optimality_proven}, {"degeneracy", res.degeneracy}};
        std::ofstream f(args.out);
        f << out.dump(2) << "\n";
        record_run_config(args.out, json{{"subcommand", "solve"},
                                         {"solver", args.solver},
                                         {"in", args.in},
                                         {"params", params},
                                         {"seed", seed},
                                         {"out", args.out}});
    }
    return 0;
}

struct BenchArgs {
    std::string config_path;
    std::string out_dir;
    int jobs = 0;
};

int cmd_bench(const BenchArgs& args) {
    if (int rc = require_file(args.config_path)) return rc;
    std::ifstream in(args.config_path);
    json j;
    in >> j;
    const CampaignConfig config = CampaignConfig::from_json(j);
    const int jobs =
        args.jobs > 0 ? args.jobs : static_cast<int>(std::thread::hardware_concurrency());
    const CampaignResult result = run_campaign(config, std::max(1, jobs));
    write_campaign_outputs(args.out_dir, config, result);
    int excluded = 0;
    for (const auto& r : result.records) excluded += r.excluded ? 1 : 0;
    std::cout << "campaign: " << result.records.size() << " records (" << excluded
              << " excluded), outputs in " << args.out_dir << "\n";
    return 0;
}

struct CommunityArgs {
    std::string in;
    std::string solver = "greedy";
    std::string out;
    bool post_greedy = false;
    std::optional<std::uint64_t> seed;
};

// Stochastic sub-problem solvers receive their step budget from the n^1.15
// policy; brute force handles anything small enough to enumerate.
IsingSolverFn make_subproblem_solver(const std::string& id) {
    return [id](const IsingInstance& inst, std::uint64_t seed, std::uint64_t budget) {
        if (inst.n <= 24 && id == "brute") return brute_force(inst);
        if (id == "sa" || (id == "brute" && inst.n > 24)) {
            AnnealSchedule sched;
            sched.sweeps = 50;
            sched.restarts = std::max<std::uint64_t>(1, budget / (sched.sweeps * inst.n));
            sched.seed = seed;
            return metropolis_anneal(inst, sched);
        }
        if (id == "sqa") {
            ProjectorParams params;
            params.walkers = 64;
            params.steps = std::max<std::uint64_t>(16, budget / params.walkers);
            params.seed = seed;
            return projector_sqa(inst, params);
        }
        throw std::invalid_argument("unknown community solver: " + id);
    };
}

int cmd_community(const CommunityArgs& args) {
    if (int rc = require_file(args.in)) return rc;
    const Graph g = read_edge_list_file(args.in);
    const std::uint64_t seed = resolve_seed(args.seed);

    CommunityResult result;
    if (args.solver == "greedy") {
        result = greedy_local_move(g, seed);
    } else {
        result = recursive_bipartition(g, make_subproblem_solver(args.solver),
                                       default_budget_policy(), seed);
        if (args.post_greedy) {
            CommunityResult refined = greedy_local_move(g, derive_seed(seed, {0x109ULL}),
                                                        &result.partition);
            refined.total_solver_steps = result.total_solver_steps;
            refined.trace = std::move(result.trace);
            result = std::move(refined);
        }
    }

    write_partition_file(args.out, result.partition);
    if (!result.trace.empty()) write_trace_file(args.out + ".trace", result.trace);
    record_run_config(args.out, json{{"subcommand", "community"},
                                     {"in", args.in},
                                     {"solver", args.solver},
                                     {"post_greedy", args.post_greedy},
                                     {"seed", seed},
                                     {"out", args.out}});
    std::cout << "communities " << result.partition.community_count() << ", Q "
              << format_double(result.q) << ", solver steps " << result.total_solver_steps
              << ", resolution bound " << format_double(resolution_limit_bound(g.edge_count()))
              << "\n";
    return 0;
}

struct IngestArgs {
    std::string kind;
    std::string from;
    std::string to;
    std::string in;
    std::string out;
};

int cmd_ingest(const IngestArgs& args) {
    if (int rc = require_file(args.in)) return rc;
    const std::int64_t start = parse_iso8601(args.from);
    const std::int64_t end = parse_iso8601(args.to);
    std::ifstream in(args.in);
    std::size_t skipped = 0;
    IngestResult result;
    if (args.kind == "mention") {
        const auto records = read_message_records(in, &skipped);
        result = grow_mention_graph(records, start, end);
    } else {
        const auto records = read_path_records(in, &skipped);
        result = grow_path_graph(records, start, end);
    }
    result.skipped = skipped;
    write_edge_list_file(args.out, result.graph);
    write_id_map_file(args.out + ".ids", result.labels);
    record_run_config(args.out, json{{"subcommand", "ingest"},
                                     {"kind", args.kind},
                                     {"from", args.from},
                                     {"to", args.to},
                                     {"in", args.in},
                                     {"out", args.out}});
    std::cout << "ingested " << result.graph.node_count() << " nodes, "
              << result.graph.edge_count() << " edges (largest component); skipped "
              << result.skipped << " malformed records\n";
    return 0;
}

int cmd_metrics(const std::string& in) {
    if (int rc = require_file(in)) return rc;
    const Graph g = read_edge_list_file(in);
    const GraphMetrics m = graph_metrics(g);
    std::cout << "n " << m.n << "\n"
              << "m " << m.m << "\n"
              << "avg_degree " << format_double(m.avg_degree) << "\n"
              << "clustering " << format_double(m.clustering_coefficient) << "\n"
              << "diameter " << m.diameter << "\n"
              << "components " << m.num_components << "\n"
              << "assortativity " << format_double(m.assortativity)
              << (m.assortativity_defined ? "" : " (undefined)") << "\n";
    std::cout << "degree_distribution";
    for (std::size_t d = 0; d < m.degree_distribution.size(); ++d)
        if (m.degree_distribution[d] > 0) std::cout << " " << d << ":" << m.degree_distribution[d];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ising/QUBO benchmark workbench on the Chimera topology"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate instances and graphs");
    gen->add_option("--family", gen_args.family, "ising|qubo|mis|mais|planted|minor|er")
        ->required()
        ->check(CLI::IsMember({"ising", "qubo", "mis", "mais", "planted", "minor", "er"}));
    gen->add_option("--k", gen_args.k, "Chimera grid size (k x k cells)");
    gen->add_option("--n", gen_args.n, "node count (er family)");
    gen->add_option("--p", gen_args.p, "edge probability (er family)");
    gen->add_option("--cycle-density", gen_args.cycle_density, "loops per node (planted)");
    gen->add_option("--loop-policy", gen_args.loop_policy, "any|short4|long (planted)")
        ->check(CLI::IsMember({"any", "short4", "long"}));
    gen->add_option("--p1", gen_args.minor.p1, "intra-cell merge probability (minor)");
    gen->add_option("--p2", gen_args.minor.p2, "inter-cell merge probability (minor)");
    gen->add_option("--p2-iters", gen_args.minor.p2_iters, "inter-cell merge rounds (minor)");
    gen->add_option("--p3", gen_args.minor.p3, "edge removal probability (minor)");
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--seed", gen_seed, "master seed (drawn and printed when absent)");
    gen->add_option("--out", gen_args.out, "output path")->required();

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--solver", solve_args.solver, "brute|dp|sa|spin|sqa")
        ->required()
        ->check(CLI::IsMember({"brute", "dp", "sa", "spin", "sqa"}));
    solve->add_option("--in", solve_args.in, "instance JSON")->required();
    solve->add_option("--params", solve_args.params_path, "solver params JSON");
    solve->add_option("--out", solve_args.out, "result JSON");
    std::optional<std::uint64_t> solve_seed;
    solve->add_option("--seed", solve_seed, "master seed");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Run a benchmarking campaign");
    bench->add_option("--config", bench_args.config_path, "campaign config JSON")->required();
    bench->add_option("--out", bench_args.out_dir, "output directory")->required();
    bench->add_option("--jobs", bench_args.jobs, "concurrent tasks (default: hardware)");

    CommunityArgs community_args;
    auto* community = app.add_subcommand("community", "Modularity community detection");
    community->add_option("--in", community_args.in, "edge-list graph")->required();
    community->add_option("--solver", community_args.solver, "greedy|brute|sa|sqa")
        ->check(CLI::IsMember({"greedy", "brute", "sa", "sqa"}));
    community->add_flag("--post-greedy", community_args.post_greedy,
                        "refine the recursive partition with local moves");
    std::optional<std::uint64_t> community_seed;
    community->add_option("--seed", community_seed, "master seed");
    community->add_option("--out", community_args.out, "partition output path")->required();

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "Grow graphs from interaction logs");
    ingest->add_option("--kind", ingest_args.kind, "mention|path")
        ->required()
        ->check(CLI::IsMember({"mention", "path"}));
    ingest->add_option("--from", ingest_args.from, "window start (ISO-8601)")->required();
    ingest->add_option("--to", ingest_args.to, "window end (ISO-8601)")->required();
    ingest->add_option("--in", ingest_args.in, "JSON-lines records")->required();
    ingest->add_option("--out", ingest_args.out, "edge-list output path")->required();

    std::string metrics_in;
    auto* metrics = app.add_subcommand("metrics", "Print graph metrics");
    metrics->add_option("--in", metrics_in, "edge-list graph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            gen_args.seed = gen_seed;
            return cmd_gen(gen_args);
        }
        if (solve->parsed()) {
            solve_args.seed = solve_seed;
            return cmd_solve(solve_args);
        }
        if (bench->parsed()) return cmd_bench(bench_args);
        if (community->parsed()) {
            community_args.seed = community_seed;
            return cmd_community(community_args);
        }
        if (ingest->parsed()) return cmd_ingest(ingest_args);
        if (metrics->parsed()) return cmd_metrics(metrics_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
