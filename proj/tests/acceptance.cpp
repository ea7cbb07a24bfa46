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

// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spinbench/bench.hpp"
#include "spinbench/chimera.hpp"
#include "spinbench/community.hpp"
#include "spinbench/generators.hpp"
#include "spinbench/graph.hpp"
#include "spinbench/solvers.hpp"
#include "spinbench/synthnet.hpp"
#include "test_helpers.hpp"

using namespace spinbench;
using namespace spinbench::testing;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d  %-28s  %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

IsingInstance family_instance(const std::string& family, const ChimeraSpec& spec, double density,
                              std::uint64_t seed) {
    if (family == "planted") return gen_planted(spec, density, LoopPolicy::Any, seed);
    const Graph topo = build_chimera(spec);
    IsingInstance inst;
    if (family == "ising")
        inst = gen_random_ising(topo, seed);
    else if (family == "mis")
        inst = gen_mis(topo, seed);
    else
        inst = gen_mais(topo, seed);
    inst.topology_header = spec.to_header();
    return inst;
}

// 1. exact_chimera_dp == brute_force on 200 instances, four families
void criterion_1() {
    const std::vector<ChimeraSpec> shapes{
        {1, 1, {}}, {1, 2, {}}, {2, 1, {}}, {1, 3, {}}, {3, 1, {}}};
    const std::vector<std::string> families{"ising", "mis", "mais", "planted"};
    int checked = 0, equal = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& family : families) {
        for (const auto& spec : shapes) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const IsingInstance inst =
                    family_instance(family, spec, seed % 2 ? 0.2 : 0.5, 1000 + seed * 13);
                const double dp = exact_chimera_dp(inst, spec).best_energy;
                const double oracle = brute_force(inst).best_energy;
                ++checked;
                if (dp == oracle) ++equal;
            }
        }
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream detail;
    detail << equal << "/" << checked << " exact matches in " << static_cast<int>(secs) << "s";
    report(1, "oracle-equivalence", equal == checked && checked == 200 && secs < 600.0,
           detail.str());
}

// 2. gauge invariance: full spectra identical, argmin maps by s' = g s
void criterion_2() {
    int checked = 0, ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        IsingInstance inst;
        if (seed % 3 == 0)
            inst = qubo_to_ising(gen_random_qubo(build_chimera({1, 1, {}}), seed));  // n = 8
        else if (seed % 3 == 1)
            inst = gen_random_ising(build_chimera({1, 2, {}}), seed);  // n = 16
        else
            inst = gen_mais(build_chimera({1, 2, {}}), seed);  // n = 16, fields
        const Gauge g = random_gauge(inst.n, seed + 7);
        const IsingInstance gauged = apply_gauge(inst, g);
        const auto spectrum = full_spectrum(inst);
        const auto gauged_spectrum = full_spectrum(gauged);
        const SolveResult base = brute_force(inst);
        SpinConfig mapped = base.best_config;
        for (NodeId i = 0; i < inst.n; ++i)
            mapped.s[i] = static_cast<std::int8_t>(g.signs[i] * mapped.s[i]);
        ++checked;
        if (spectrum == gauged_spectrum && energy(gauged, mapped) == gauged_spectrum.front()) ++ok;
    }
    report(2, "gauge-invariance", ok == checked && checked == 100,
           std::to_string(ok) + "/" + std::to_string(checked) + " spectra identical");
}

// 3. QUBO <-> Ising agreement on every assignment, round-trip identity
void criterion_3() {
    int checked = 0, ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const NodeId n = 8 + seed % 5;  // up to 12
        QuboInstance q = gen_random_qubo(random_gnp(n, 0.4, seed + 4000), seed);
        q.offset = 0.5 + 0.01 * static_cast<double>(seed % 7);
        const IsingInstance inst = qubo_to_ising(q);
        bool good = true;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int8_t> x(n);
            SpinConfig s;
            s.s.resize(n);
            for (NodeId i = 0; i < n; ++i) {
                x[i] = (mask >> i) & 1;
                s.s[i] = static_cast<std::int8_t>(1 - 2 * x[i]);
            }
            if (std::abs(qubo_value(q, x) - energy(inst, s)) > 1e-12) good = false;
        }
        const QuboInstance back = ising_to_qubo(inst);
        if (std::abs(back.offset - q.offset) > 1e-12) good = false;
        for (NodeId i = 0; i < n; ++i)
            if (std::abs(back.a[i] - q.a[i]) > 1e-12) good = false;
        if (back.b.size() != q.b.size()) good = false;
        for (std::size_t i = 0; good && i < q.b.size(); ++i)
            if (std::abs(back.b[i].value - q.b[i].value) > 1e-12) good = false;
        ++checked;
        if (good) ++ok;
    }
    report(3, "qubo-ising-fidelity", ok == checked && checked == 100,
           std::to_string(ok) + "/" + std::to_string(checked) + " within 1e-12");
}

// 4. decoded MIS ground states are maximum independent sets
void criterion_4() {
    int checked = 0, ok = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const NodeId n = 8 + seed % 11;  // up to 18
        const Graph g = random_gnp(n, 0.25, seed + 600);
        const IsingInstance inst = gen_mis(g, seed);
        // the kept subgraph carries the J = 1 couplers
        Graph kept(n);
        for (const auto& c : inst.couplers) kept.add_edge(c.i, c.j);
        const SolveResult res = brute_force(inst);
        const auto decoded = decode_independent_set(inst, res.best_config);
        const std::vector<NodeId> nodes(decoded.begin(), decoded.end());
        ++checked;
        if (is_independent_set(kept, nodes) && nodes.size() == mis_size_exhaustive(kept)) ++ok;
    }
    report(4, "mis-correctness", ok == checked && checked == 50,
           std::to_string(ok) + "/" + std::to_string(checked) + " maximum independent sets");
}

// 5. planted optimality at oracle scale, recorded energy at full scale
void criterion_5() {
    int checked = 0, ok = 0;
    const std::vector<ChimeraSpec> shapes{{1, 1, {}}, {1, 2, {}}, {1, 3, {}}};
    for (double density : {0.2, 0.5}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto& spec = shapes[seed % shapes.size()];
            const IsingInstance inst = gen_planted(spec, density, LoopPolicy::Any, seed * 17 + 3);
            ++checked;
            if (brute_force(inst).best_energy == *inst.planted_energy &&
                energy(inst, *inst.planted) == *inst.planted_energy)
                ++ok;
        }
    }
    int big_checked = 0, big_ok = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (double density : {0.2, 0.5}) {
            const IsingInstance inst = gen_planted({8, 8, {}}, density, LoopPolicy::Any, seed);
            ++big_checked;
            if (energy(inst, *inst.planted) == *inst.planted_energy) ++big_ok;
        }
    }
    std::ostringstream detail;
    detail << ok << "/" << checked << " oracle-verified, " << big_ok << "/" << big_checked
           << " exact at n=512";
    report(5, "planted-optimality", ok == checked && checked == 100 && big_ok == big_checked,
           detail.str());
}

// 6. Chimera structure for k = 1..8. A 1x1 block has no inter-cell couplers,
// so every node has degree 4 there (the 16-edge count asserted by this same
// criterion forces it); the 5..6 degree band applies from k = 2 up.
void criterion_6() {
    bool ok = true;
    std::string note;
    for (NodeId k = 1; k <= 8; ++k) {
        const Graph g = build_chimera({k, k, {}});
        if (g.node_count() != 8 * k * k) ok = false;
        if (g.edge_count() != 16 * k * k + 8 * k * (k - 1)) ok = false;
        if (triangle_count(g) != 0) ok = false;
        // bipartite by sides: every edge joins distinct sides or equal sides
        // in adjacent cells of the matching orientation; check by 2-coloring
        std::vector<int> color(g.node_count(), -1);
        for (NodeId start = 0; start < g.node_count() && ok; ++start) {
            if (color[start] != -1) continue;
            color[start] = 0;
            std::vector<NodeId> stack{start};
            while (!stack.empty()) {
                const NodeId v = stack.back();
                stack.pop_back();
                for (NodeId w : g.neighbors(v)) {
                    if (color[w] == -1) {
                        color[w] = 1 - color[v];
                        stack.push_back(w);
                    } else if (color[w] == color[v]) {
                        ok = false;
                    }
                }
            }
        }
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const NodeId d = g.degree(v);
            if (k == 1 ? d != 4 : (d != 5 && d != 6)) ok = false;
        }
    }
    report(6, "chimera-structure", ok, "counts, bipartite, triangle-free, degree bands for k=1..8");
}

// 7. stochastic solver quality gates at desk scale
void criterion_7() {
    const auto t0 = std::chrono::steady_clock::now();
    int sa_k1 = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChimeraSpec spec{1, 1, {}};
        const IsingInstance inst = family_instance("ising", spec, 0, 7000 + seed);
        AnnealSchedule sched;
        sched.sweeps = 200;
        sched.restarts = 100;
        sched.seed = seed;
        if (metropolis_anneal(inst, sched).best_energy == exact_chimera_dp(inst, spec).best_energy)
            ++sa_k1;
    }
    int sa_k2 = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChimeraSpec spec{2, 2, {}};
        const IsingInstance inst = family_instance("ising", spec, 0, 8000 + seed);
        AnnealSchedule sched;
        sched.sweeps = 200;
        sched.restarts = 100;
        sched.seed = seed;
        if (metropolis_anneal(inst, sched).best_energy == exact_chimera_dp(inst, spec).best_energy)
            ++sa_k2;
    }
    int sqa = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChimeraSpec spec{1, 2, {}};  // n = 16 <= 20
        const IsingInstance inst = family_instance("ising", spec, 0, 9000 + seed);
        ProjectorParams params;
        params.walkers = 256;
        params.steps = 2000;
        params.seed = seed;
        if (projector_sqa(inst, params).best_energy == exact_chimera_dp(inst, spec).best_energy)
            ++sqa;
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream detail;
    detail << "sa k=1: " << sa_k1 << "/100 (need 99), sa k=2: " << sa_k2
           << "/100 (need 90), sqa n=16: " << sqa << "/100 (need 95), " << static_cast<int>(secs)
           << "s";
    report(7, "solver-quality", sa_k1 >= 99 && sa_k2 >= 90 && sqa >= 95 && secs < 900.0,
           detail.str());
}

// 8. near-optimality analog: Metropolis stays within 4% of optimal
void criterion_8() {
    std::vector<std::pair<double, double>> achieved_optimal;
    int within = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ChimeraSpec spec{4, 4, {}};
        const IsingInstance inst = family_instance("ising", spec, 0, 4400 + seed);
        const double optimal = exact_chimera_dp(inst, spec).best_energy;
        AnnealSchedule sched;
        sched.sweeps = 200;
        sched.restarts = 100;
        sched.seed = seed;
        const double achieved = metropolis_anneal(inst, sched).best_energy;
        achieved_optimal.push_back({achieved, optimal});
        if (achieved / optimal >= 0.96) ++within;
    }
    const QualityHistogram hist = quality_histogram(achieved_optimal, 0.01);
    std::ostringstream bins;
    for (const auto& [bin, count] : hist.counts)
        bins << " " << hist.percent_label(bin) << "%:" << count;
    std::ostringstream detail;
    detail << within << "/100 runs at q >= 0.96; histogram" << bins.str();
    report(8, "near-optimality-band", within >= 99, detail.str());
}

// 9. TTS formula fixed points
void criterion_9() {
    const TtsEstimate half = tts(0.5, 20.0);
    const TtsEstimate certain = tts(1.0, 20.0);
    const TtsEstimate never = tts(0.0, 20.0);
    const bool ok = half.tts99 == 140.0 && half.tts_mean == 40.0 && certain.tts99 == 20.0 &&
                    certain.tts_mean == 20.0 && never.excluded;
    report(9, "tts-formulas", ok, "tts(0.5,20us) = (140us,40us); tts(1)=(t,t); p=0 excluded");
}

// 10. modularity pipeline
void criterion_10() {
    bool all_one_ok = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Graph g = random_gnp(12 + seed % 8, 0.3, seed + 1200);
        if (g.edge_count() == 0) continue;
        Partition one{std::vector<NodeId>(g.node_count(), 0)};
        if (modularity(g, one) != 0.0) all_one_ok = false;
    }

    const Graph bridge = two_triangles_bridge();
    const CommunityResult rec = recursive_bipartition(
        bridge,
        [](const IsingInstance& inst, std::uint64_t, std::uint64_t) { return brute_force(inst); },
        default_budget_policy(), 5);
    const bool bridge_ok =
        rec.partition.community_count() == 2 && std::abs(rec.q - 5.0 / 14.0) < 1e-10;

    // corpus subgraphs: argmin of the bipartition instance == exhaustive max Q
    std::vector<Graph> corpus{bridge, complete_graph(4), path_graph(6)};
    {
        Graph two_k4(8);
        for (NodeId u = 0; u < 4; ++u)
            for (NodeId v = u + 1; v < 4; ++v) {
                two_k4.add_edge(u, v);
                two_k4.add_edge(u + 4, v + 4);
            }
        two_k4.add_edge(3, 4);
        corpus.push_back(two_k4);
        Graph ring(8);
        for (NodeId v = 0; v < 8; ++v) ring.add_edge(v, (v + 1) % 8);
        corpus.push_back(ring);
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            corpus.push_back(random_gnp(10 + seed, 0.35, seed + 2500));
    }
    int sub_checked = 0, sub_ok = 0;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        const Graph& g = corpus[gi];
        std::vector<std::vector<NodeId>> subsets;
        std::vector<NodeId> all(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
        subsets.push_back(all);
        Rng rng(gi);
        for (int s = 0; s < 3; ++s) {
            std::vector<NodeId> subset;
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (rng.next_double() < 0.7) subset.push_back(v);
            if (subset.size() >= 2) subsets.push_back(subset);
        }
        for (const auto& subset : subsets) {
            const Graph induced = g.induced_subgraph(subset);
            if (induced.edge_count() == 0 || induced.node_count() > 14) continue;
            const BipartitionProblem prob = bipartition_ising(g, subset);
            ++sub_checked;
            if (std::abs(-brute_force(prob.instance).best_energy - best_bipartition_q(induced)) <
                1e-10)
                ++sub_ok;
        }
    }
    std::ostringstream detail;
    detail << "all-one Q == 0 on 50 graphs; bridge Q = 5/14 via recursion; " << sub_ok << "/"
           << sub_checked << " subgraph argmins match exhaustive Q";
    report(10, "modularity", all_one_ok && bridge_ok && sub_ok == sub_checked && sub_checked > 20,
           detail.str());
}

// 11. Chimera-minor generator hits the published bands at the defaults
void criterion_11() {
    const ChimeraSpec spec{8, 8, {}};
    const Graph host = build_chimera(spec);
    double util_sum = 0.0;
    int verified = 0, in_band = 0, eligible = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        MinorGenParams params;
        params.seed = seed;
        const ChimeraMinor minor = generate_chimera_minor(spec, params);
        util_sum += utilization(minor.embedding, spec);
        if (verify_minor_embedding(minor.graph, host, minor.embedding)) ++verified;
        if (minor.graph.node_count() >= 200) {
            ++eligible;
            const double c = clustering_coefficient(minor.graph);
            if (c >= 0.05 && c <= 0.2) ++in_band;
        }
    }
    const double mean_util = util_sum / 30.0;
    std::ostringstream detail;
    detail << "mean utilization " << mean_util << " (need >= 0.55), clustering in [0.05,0.2] for "
           << in_band << "/" << eligible << " seeds, " << verified << "/30 verified minors";
    report(11, "chimera-minor-generator",
           mean_util >= 0.55 && verified == 30 && eligible == 30 &&
               in_band * 10 >= eligible * 8,
           detail.str());
}

// 12. scaling-fit recovery on closed-form data
void criterion_12() {
    bool ok = true;
    std::ostringstream detail;
    for (double base : {1.5, 2.0}) {
        std::vector<std::pair<double, double>> pts;
        for (double n : {8.0, 32.0, 72.0, 128.0, 200.0, 288.0})
            pts.push_back({n, 3.0 * std::pow(base, std::sqrt(n))});
        const ScalingFit fit = fit_scaling(pts, XTransform::SqrtN);
        const double target = std::log10(base);
        if (std::abs(fit.slope - target) > 0.01 * target) ok = false;
        detail << "a=" << base << ": slope " << fit.slope << " vs " << target << "; ";
    }
    for (double exponent : {1.5, 2.2}) {
        std::vector<std::pair<double, double>> pts;
        for (double n : {10.0, 100.0, 1000.0, 10000.0})
            pts.push_back({n, 0.7 * std::pow(n, exponent)});
        const ScalingFit fit = fit_scaling(pts, XTransform::LogN);
        if (std::abs(fit.slope - exponent) > 0.01 * exponent) ok = false;
        detail << "alpha=" << exponent << ": slope " << fit.slope << "; ";
    }
    report(12, "scaling-fit-recovery", ok, detail.str());
}

// 13. campaign determinism, including across --jobs
void criterion_13() {
    CampaignConfig config;
    config.family = "ising";
    config.sizes = {1, 2};
    config.instances = 3;
    config.solvers = {{"sa", nlohmann::json{{"restarts", 10}, {"sweeps", 50}}},
                      {"sqa", nlohmann::json{{"walkers", 32}, {"steps", 100}}}};
    config.trials = 2;
    config.gauges = 2;
    config.criterion = SuccessCriterion::optimal();
    config.seed = 31337;

    const auto base = fs::temp_directory_path() / "spinbench_acceptance_campaign";
    fs::remove_all(base);
    std::vector<std::string> outputs;
    for (int run = 0; run < 3; ++run) {
        const int jobs = run == 2 ? 4 : 1;
        const auto dir = base / ("run" + std::to_string(run));
        write_campaign_outputs(dir.string(), config, run_campaign(config, jobs));
        std::ifstream in(dir / "records.csv");
        std::stringstream buf;
        buf << in.rdbuf();
        outputs.push_back(buf.str());
    }
    fs::remove_all(base);
    const bool ok = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2];
    report(13, "campaign-determinism", ok,
           "three runs (jobs 1, 1, 4) produced byte-identical records.csv");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
