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

#include "spinbench/generators.hpp"
#include "spinbench/solvers.hpp"
#include "test_helpers.hpp"

using namespace spinbench;
using namespace spinbench::testing;

namespace {
IsingInstance family_instance(const std::string& family, const ChimeraSpec& spec,
                              std::uint64_t seed) {
    if (family == "planted") return gen_planted(spec, 0.3, LoopPolicy::Any, seed);
    const Graph topo = build_chimera(spec);
    if (family == "ising") return gen_random_ising(topo, seed);
    if (family == "mis") return gen_mis(topo, seed);
    return gen_mais(topo, seed);
}
}  // namespace

TEST_CASE("brute force") {
    SUBCASE("two-spin coupler") {
        IsingInstance inst;
        inst.n = 2;
        inst.h.assign(2, 0.0);
        inst.add_coupler(0, 1, 1.0);
        const SolveResult res = brute_force(inst);
        CHECK(res.best_energy == -1.0);
        CHECK(res.degeneracy == 2);
        CHECK(res.optimality_proven);
        CHECK(energy(inst, res.best_config) == res.best_energy);
    }
    SUBCASE("size limit") {
        IsingInstance big;
        big.n = 27;
        big.h.assign(27, 0.0);
        CHECK_THROWS_WITH(brute_force(big), "oracle size limit");
    }
    SUBCASE("matches exhaustive minimum") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const IsingInstance inst = gen_mais(random_gnp(10, 0.4, seed), seed);
            CHECK(brute_force(inst).best_energy == min_energy_exhaustive(inst));
        }
    }
    SUBCASE("degenerate mis optima resolve to an independent set") {
        // all-ones path of four: {0,2}, {0,3}, {1,3} and the quasi-set
        // {0,1,3} all sit at the ground energy; the tie-break must not
        // surface the quasi-set
        IsingInstance inst;
        inst.n = 4;
        inst.h = {-1.0, 0.0, 0.0, -1.0};
        inst.family = "mis";
        inst.add_coupler(0, 1, 1.0);
        inst.add_coupler(1, 2, 1.0);
        inst.add_coupler(2, 3, 1.0);
        const SolveResult res = brute_force(inst);
        CHECK(res.best_energy == -3.0);
        const auto set = decode_independent_set(inst, res.best_config);
        CHECK(set.size() == 2);
        CHECK(is_independent_set(path_graph(4), {set.begin(), set.end()}));
    }
}

TEST_CASE("chimera dp equals brute force") {
    const std::vector<ChimeraSpec> shapes{{1, 1, {}}, {1, 2, {}}, {2, 1, {}}, {1, 3, {}}, {3, 1, {}}};
    for (const auto& family : {"ising", "mis", "mais", "planted"}) {
        for (const auto& spec : shapes) {
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const IsingInstance inst = family_instance(family, spec, seed * 31 + 7);
                const SolveResult dp = exact_chimera_dp(inst, spec);
                const SolveResult oracle = brute_force(inst);
                CHECK(dp.best_energy == oracle.best_energy);
                CHECK(energy(inst, dp.best_config) == dp.best_energy);
                CHECK(dp.optimality_proven);
            }
        }
    }
}

TEST_CASE("chimera dp on planted 4x4") {
    const ChimeraSpec spec{4, 4, {}};
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const IsingInstance inst = gen_planted(spec, 0.25, LoopPolicy::Any, seed);
        CHECK(exact_chimera_dp(inst, spec).best_energy == *inst.planted_energy);
    }
}

TEST_CASE("chimera dp rejects bad input") {
    SUBCASE("non-chimera coupler") {
        IsingInstance inst;
        inst.n = 8;
        inst.h.assign(8, 0.0);
        inst.add_coupler(0, 1, 1.0);  // two left-side nodes of one cell
        CHECK_THROWS(exact_chimera_dp(inst, {1, 1, {}}));
    }
    SUBCASE("frontier beyond the memory budget") {
        const ChimeraSpec spec{5, 5, {}};
        const IsingInstance inst = gen_random_ising(build_chimera(spec), 1);
        CHECK_THROWS(exact_chimera_dp(inst, spec, 1 << 20));
    }
    SUBCASE("size mismatch") {
        const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), 1);
        CHECK_THROWS(exact_chimera_dp(inst, {2, 2, {}}));
    }
}

TEST_CASE("metropolis annealer") {
    SUBCASE("single spin reaches its field minimum") {
        IsingInstance inst;
        inst.n = 1;
        inst.h = {-1.0};
        AnnealSchedule sched;
        sched.sweeps = 10;
        sched.restarts = 1;
        sched.seed = 3;
        const SolveResult res = metropolis_anneal(inst, sched);
        CHECK(res.best_config.s == std::vector<std::int8_t>{1});
        CHECK(res.best_energy == -1.0);
    }
    SUBCASE("matches the oracle on single cells") {
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), seed + 900);
            AnnealSchedule sched;
            sched.sweeps = 200;
            sched.restarts = 100;
            sched.seed = seed;
            if (metropolis_anneal(inst, sched).best_energy == brute_force(inst).best_energy)
                ++hits;
        }
        CHECK(hits >= 19);
    }
    SUBCASE("frozen low temperature behaves as greedy descent") {
        const IsingInstance inst = gen_random_ising(build_chimera({1, 2, {}}), 17);
        AnnealSchedule sched;
        sched.sweeps = 50;
        sched.restarts = 1;
        sched.t_start = 1e-9;
        sched.t_end = 1e-9;
        sched.seed = 5;
        const SolveResult res = metropolis_anneal(inst, sched);
        // a greedy endpoint admits no improving single flip
        const CouplerAdjacency adj(inst);
        auto spins = res.best_config.s;
        for (NodeId i = 0; i < inst.n; ++i) CHECK(adj.flip_delta(inst, spins, i) >= 0.0);
    }
    SUBCASE("deterministic in the seed") {
        const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), 50);
        AnnealSchedule sched;
        sched.sweeps = 30;
        sched.restarts = 5;
        sched.seed = 77;
        const SolveResult a = metropolis_anneal(inst, sched);
        const SolveResult b = metropolis_anneal(inst, sched);
        CHECK(a.best_energy == b.best_energy);
        CHECK(a.best_config.s == b.best_config.s);
    }
}

TEST_CASE("spin dynamics") {
    SUBCASE("single spin aligns with the field") {
        IsingInstance inst;
        inst.n = 1;
        inst.h = {-1.0};
        SpinDynamicsParams params;
        params.steps = 2000;
        params.seed = 4;
        for (auto mode : {SpinDynamicsMode::Steepest, SpinDynamicsMode::Momentum}) {
            const SolveResult res = spin_dynamics(inst, mode, params);
            CHECK(res.best_config.s == std::vector<std::int8_t>{1});
            CHECK(res.best_energy == -1.0);
        }
    }
    SUBCASE("two-spin ferromagnet locks parallel") {
        IsingInstance inst;
        inst.n = 2;
        inst.h.assign(2, 0.0);
        inst.add_coupler(0, 1, -1.0);
        SpinDynamicsParams params;
        params.steps = 4000;
        params.restarts = 3;
        params.seed = 8;
        const SolveResult res = spin_dynamics(inst, SpinDynamicsMode::Steepest, params);
        CHECK(res.best_energy == -1.0);
        CHECK(res.best_config.s[0] == res.best_config.s[1]);
    }
    SUBCASE("oracle hit rate is recorded, not asserted") {
        // diagnostic solver: report how often steepest descent finds the
        // optimum on single cells
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), seed + 60);
            SpinDynamicsParams params;
            params.steps = 4000;
            params.restarts = 10;
            params.seed = seed;
            const SolveResult res = spin_dynamics(inst, SpinDynamicsMode::Steepest, params);
            if (res.best_energy == brute_force(inst).best_energy) ++hits;
            CHECK(energy(inst, res.best_config) == res.best_energy);
        }
        MESSAGE("steepest spin dynamics oracle hits: ", hits, "/10");
    }
}

TEST_CASE("projector sqa") {
    SUBCASE("two-spin ferromagnet nearly always solved") {
        IsingInstance inst;
        inst.n = 2;
        inst.h.assign(2, 0.0);
        inst.add_coupler(0, 1, -1.0);
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            ProjectorParams params;
            params.walkers = 256;
            params.steps = 2000;
            params.seed = seed;
            if (projector_sqa(inst, params).best_energy == -1.0) ++hits;
        }
        CHECK(hits >= 99);
    }
    SUBCASE("zero transverse field never flips") {
        const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), 123);
        ProjectorParams params;
        params.walkers = 64;
        params.f_start = 0.0;
        params.f_end = 0.0;
        params.seed = 9;
        params.steps = 5;
        const double short_run = projector_sqa(inst, params).best_energy;
        params.steps = 500;
        const double long_run = projector_sqa(inst, params).best_energy;
        CHECK(short_run == long_run);  // best fixed at the initial population
    }
    SUBCASE("tau validation") {
        const IsingInstance inst = gen_random_ising(build_chimera({1, 1, {}}), 1);
        ProjectorParams params;
        params.tau = 10.0;
        CHECK_THROWS(projector_sqa(inst, params));
    }
    SUBCASE("deterministic in the seed") {
        const IsingInstance inst = gen_mais(build_chimera({1, 1, {}}), 2);
        ProjectorParams params;
        params.walkers = 32;
        params.steps = 200;
        params.seed = 5;
        const SolveResult a = projector_sqa(inst, params);
        const SolveResult b = projector_sqa(inst, params);
        CHECK(a.best_energy == b.best_energy);
        CHECK(a.best_config.s == b.best_config.s);
    }
}

TEST_CASE("gauge equivariance of the oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const IsingInstance inst = gen_mais(build_chimera({1, 1, {}}), seed + 10);
        const Gauge g = random_gauge(inst.n, seed);
        const IsingInstance gauged = apply_gauge(inst, g);
        const SolveResult base = brute_force(inst);
        const SolveResult transformed = brute_force(gauged);
        CHECK(base.best_energy == transformed.best_energy);
        // the base argmin maps onto the gauged ground manifold
        SpinConfig mapped = base.best_config;
        for (NodeId i = 0; i < inst.n; ++i)
            mapped.s[i] = static_cast<std::int8_t>(g.signs[i] * mapped.s[i]);
        CHECK(energy(gauged, mapped) == transformed.best_energy);
    }
}
